#pragma once

#include <pgate/number_field.hpp>
#include <pgate/presentation.hpp>
#include <pgate/schreier.hpp>

#include <string>
#include <vector>

namespace pgate {

// [[a, b], [c, d]] over a number field.
struct Matrix2 {
  FieldElement a, b, c, d;

  static Matrix2 identity(const FieldPtr& field);
  static Matrix2 from_rationals(const FieldPtr& field, long a, long b, long c,
                                long d);

  const FieldPtr& field() const { return a.field(); }
  FieldElement trace() const { return a + d; }
  FieldElement determinant() const { return a * d - b * c; }
  bool is_identity() const;
  bool is_minus_identity() const;

  // General inverse; throws for singular matrices.
  Matrix2 inverse() const;
  // Adjugate, which is the inverse when det = 1.
  Matrix2 adjugate() const;

  Matrix2 operator-() const;
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y);
  friend Matrix2 operator-(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2& x, const Matrix2& y);

  std::string to_string() const;
};

struct Representation {
  GroupPresentation group;
  std::vector<Matrix2> images;
  FieldPtr field;
};

Matrix2 evaluate_word(const Representation& rho, const Word& w);

struct ValidationReport {
  std::vector<int> bad_determinant;     // generator indices
  std::vector<int> failed_relators;     // image neither I nor -I
  std::vector<int> lift_inconsistent;   // image is -I
  std::vector<std::string> warnings;

  bool ok() const {
    return bad_determinant.empty() && failed_relators.empty() &&
           lift_inconsistent.empty();
  }
  std::string summary(const GroupPresentation& g) const;
};

ValidationReport validate_representation(const Representation& rho);

// Throws ValidationError carrying the report summary unless ok().
void require_valid(const Representation& rho);

enum class MeridianTrace { Plus, Minus, NonParabolic };

std::string to_string(MeridianTrace s);

// Throws ValidationError when the presentation has no meridian.
MeridianTrace meridian_trace_sign(const Representation& rho);

// tr(AB) + tr(AB^-1) - tr(A) tr(B), identically zero on SL_2.
FieldElement trace_relation_check(const Matrix2& A, const Matrix2& B);

// Representation of ker(epsilon) obtained by restricting rho along the
// inclusion words; the result is validated against the kernel relators.
Representation restrict_representation(const Representation& rho,
                                       const KernelPresentation& kernel);

}  // namespace pgate
