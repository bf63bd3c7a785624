#pragma once

#include <pgate/abelianization.hpp>
#include <pgate/polynomial.hpp>
#include <pgate/sl2.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pgate {

// Rows index relators, columns generators; each entry is a 2x2 block whose
// entries are polynomials in t.
struct BlockMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::vector<Polynomial>>> blocks;  // [r][c][4]
  // The Laurent entries were multiplied by t^shift to clear negative powers.
  int shift = 0;

  // Scalar matrix after deleting block column `skip` (or none when -1).
  std::vector<std::vector<Polynomial>> flatten(int skip = -1) const;
};

// Entry (i, j) is Phi(d r_i / d g_j) with Phi(g) = t^alpha(g) rho(g).
// Requires a deficiency-one presentation.
BlockMatrix wada_block_matrix(const GroupPresentation& g,
                              const Abelianization& alpha,
                              const Representation& rho);

// Exact determinant over K[t] by fraction-free (Bareiss) elimination.
Polynomial block_determinant(std::vector<std::vector<Polynomial>> m,
                             const FieldPtr& field);

// det(t^k M - I) made polynomial.
Polynomial denominator_for(const Matrix2& image, long alpha_value);

struct TorsionValue {
  Polynomial numerator;
  Polynomial denominator;
  bool exact_division = false;
  // Present when exact_division.
  std::optional<UnitNormalForm> normalized;
  int deleted_column = -1;

  // The polynomial when exact; throws otherwise.
  const Polynomial& polynomial() const;
  std::string to_string(const std::string& var = "t") const;
};

// Wada invariant with the given generator's column deleted, or the column
// whose denominator det Phi(g - 1) has lowest degree when delete_column < 0.
// The fraction is reduced; when it divides exactly the quotient is unit
// normalized.
TorsionValue twisted_alexander(const GroupPresentation& g,
                               const Abelianization& alpha,
                               const Representation& rho,
                               int delete_column = -1);

// Columns whose denominator is nonzero.
std::vector<int> admissible_columns(const GroupPresentation& g,
                                    const Abelianization& alpha,
                                    const Representation& rho);

// Same rational function up to +-t^k.
bool equal_up_to_unit(const TorsionValue& a, const TorsionValue& b);

// Torsion for rho'(g) = (-1)^alpha(g) rho(g): t -> -t, renormalized.
TorsionValue torsion_of_other_lift(const TorsionValue& T);

}  // namespace pgate
