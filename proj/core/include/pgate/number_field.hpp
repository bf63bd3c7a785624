#pragma once

#include <pgate/rational.hpp>

#include <memory>
#include <string>
#include <vector>

namespace pgate {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q(z)/(m(z)) for a monic irreducible m of degree d >= 1. Degree one is how
// Q itself is represented, so every algorithm is written once.
class NumberField {
 public:
  // min_poly is given lowest degree first. Throws ArithmeticError unless it is
  // monic, of degree >= 1 and irreducible over Q.
  static FieldPtr create(std::string variable, std::vector<Rational> min_poly);

  // Q as the degree-one field z - 0.
  static FieldPtr rationals();

  const std::string& variable() const { return variable_; }
  const std::vector<Rational>& min_poly() const { return min_poly_; }
  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  bool is_rationals() const { return degree() == 1; }

  bool same_as(const NumberField& other) const;

  // "z^3 + z - 1"
  std::string min_poly_string() const;

  // Reduction of z^k for d <= k <= 2d-2, as coordinate vectors.
  const std::vector<std::vector<Rational>>& power_table() const {
    return power_table_;
  }

 private:
  NumberField(std::string variable, std::vector<Rational> min_poly);

  std::string variable_;
  std::vector<Rational> min_poly_;
  std::vector<std::vector<Rational>> power_table_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// An element of a number field in the power basis 1, z, ..., z^{d-1}.
class FieldElement {
 public:
  explicit FieldElement(FieldPtr field);
  FieldElement(FieldPtr field, Rational value);
  FieldElement(FieldPtr field, long value);
  // Coordinates of any length; reduced modulo the minimal polynomial.
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Constant coordinate; meaningful when is_rational().
  const Rational& rational_part() const { return coords_[0]; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement& operator*=(const Rational& c);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& c) { return a *= c; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // Throws ArithmeticError for zero.
  FieldElement inverse() const;
  FieldElement pow(long e) const;

  // "5/4*z^7 - 9/4*z^6 + 23/2"; plain rationals for elements of Q.
  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& o) const;

  FieldPtr field_;
  std::vector<Rational> coords_;
};

// Lexicographic on coordinates, constant coordinate first. Total but
// arbitrary; used only to make outputs deterministic.
int compare(const FieldElement& a, const FieldElement& b);

// Characteristic polynomial of multiplication by a on the field as a
// Q-vector space, lowest degree first, monic of degree d.
std::vector<Rational> characteristic_polynomial(const FieldElement& a);

// True iff the characteristic polynomial has integer coefficients.
bool is_algebraic_integer(const FieldElement& a);

}  // namespace pgate
