#pragma once

#include <pgate/number_field.hpp>

#include <string>
#include <utility>
#include <vector>

namespace pgate {

// Dense univariate polynomial in t over a number field. Coefficients are
// indexed by degree and trailing zeros are trimmed, so the zero polynomial
// has no coefficients.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field);
  Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial monomial(const FieldElement& c, int degree);
  // t - 0 style helper: the variable itself.
  static Polynomial variable(FieldPtr field);
  static Polynomial from_rationals(FieldPtr field,
                                   const std::vector<Rational>& coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  // Coefficient of t^k, zero when out of range.
  FieldElement coeff(int k) const;
  FieldElement leading() const;
  // Lowest k with a nonzero coefficient; -1 for zero.
  int valuation() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const FieldElement& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Polynomial pow(int e) const;
  FieldElement evaluate(const FieldElement& x) const;
  // p(c * t)
  Polynomial scale_variable(const FieldElement& c) const;
  // p(t + c)
  Polynomial shift_variable(const FieldElement& c) const;
  // p(t^k)
  Polynomial inflate(int k) const;
  // p(t) * t^k, k >= 0
  Polynomial shifted(int k) const;

  // "t^10 + (-2*z^2 - 3*z - 7)*t^9 + ... + 1"
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  void check_same_field(const Polynomial& o) const;

  FieldPtr field_;
  std::vector<FieldElement> coeffs_;
};

// Deterministic total order: degree first, then coefficients from the top.
int compare(const Polynomial& a, const Polynomial& b);

// Quotient and remainder with deg(rem) < deg(b). Throws on zero divisor.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a,
                                         const Polynomial& b);

// Division that must be exact; throws ArithmeticError otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0, 0) is rejected.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Yun decomposition into pairwise coprime monic squarefree parts, ordered by
// multiplicity. Degree-zero parts are omitted.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(
    const Polynomial& p);

// Res_z(m(z), q(z, t)) where q is a polynomial over Q(z)/(m) read with z
// symbolic. Computed from the Sylvester matrix by fraction-free
// elimination; for the field's own minimal polynomial this is the norm of q
// down to Q. The result lives over Q.
Polynomial resultant(const std::vector<Rational>& m, const Polynomial& q);

// Norm from the coefficient field down to Q (resultant against m).
Polynomial norm(const Polynomial& q);

// p(-t^2)
Polynomial substitute_neg_t_squared(const Polynomial& p);

// p(-t)
Polynomial substitute_neg_t(const Polynomial& p);

// Canonical representative of p modulo the units +-t^k:
// original = sign * t^shift * poly, poly(0) != 0, and the first nonzero
// coordinate of poly(0) is positive.
struct UnitNormalForm {
  Polynomial poly;
  int shift = 0;
  int sign = 1;
};

UnitNormalForm unit_normalize(const Polynomial& p);

bool equal_up_to_unit(const Polynomial& a, const Polynomial& b);

}  // namespace pgate
