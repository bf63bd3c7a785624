#pragma once

#include <pgate/presentation.hpp>
#include <pgate/rational.hpp>

#include <array>
#include <string>
#include <vector>

namespace pgate {

// Diagonal of the Smith normal form D = U A V together with V.
struct SmithForm {
  std::vector<Integer> diagonal;           // length min(rows, cols)
  std::vector<std::vector<Integer>> right;  // V, cols x cols
  int rank = 0;
};

SmithForm smith_normal_form(std::vector<std::vector<Integer>> matrix);

// H_1 of a presentation: free rank and torsion coefficients (> 1).
struct Homology {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
  std::string to_string() const;  // "Z", "Z/2", "Z^2 + Z/5"
};

Homology homology(const GroupPresentation& g);

// The map G -> H_1 = Z, one value per generator, and its reduction mod 2.
struct Abelianization {
  Homology h1;
  std::vector<long> values;
  std::vector<int> epsilon;

  long evaluate(const Word& w) const;
  int parity(const Word& w) const;
};

// Requires H_1 = Z. The sign is fixed so the meridian (when present) maps
// positively, else the first nonzero generator. Throws ValidationError for
// knot-complement kinds whose H_1 is not infinite cyclic, and for generic
// groups reports the homology found in the message as well.
Abelianization abelianize(const GroupPresentation& g);

// Lift of a boundary class through the 2-fold cover: (p, q) in the
// meridian-longitude basis of K maps to (2p, p + q) in the (alpha, lbar)
// basis of the quotient knot.
struct PeripheralChangeOfBasis {
  static constexpr std::array<std::array<int, 2>, 2> matrix{{{2, 0}, {1, 1}}};
  static constexpr int determinant() {
    return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
  }
};

std::array<long, 2> peripheral_cover_map(std::array<long, 2> coords);

}  // namespace pgate
