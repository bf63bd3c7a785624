#pragma once

#include <pgate/abelianization.hpp>
#include <pgate/presentation.hpp>

#include <vector>

namespace pgate {

struct KernelPresentation {
  GroupPresentation group;
  // Image of each kernel generator as a word in the parent group.
  std::vector<Word> inclusion;
  // Generator of the transversal {1, x0}.
  int transversal = 0;
  std::vector<int> epsilon;

  // Rewrites a parent word with even epsilon-weight into kernel generators.
  Word rewrite(const Word& parent_word) const;
};

// Presentation of ker(epsilon) for the index-2 subgroup, by the
// Reidemeister-Schreier process with transversal {1, x0}, x0 the first
// generator with odd epsilon. Kernel generators are named g0 (coset 1) and
// g1 (coset x0); x0 0 is trivial and omitted. Each parent relator yields two
// kernel relators. When the parent is a quotient knot with peripheral words
// (alpha, lbar), the kernel gets meridian alpha^2 lbar and longitude lbar
// and is marked as a sphere knot.
KernelPresentation reidemeister_schreier_index2(const GroupPresentation& g,
                                                const std::vector<int>& epsilon);

// Uses the mod-2 reduction of the abelianization; requires H_1 = Z.
KernelPresentation reidemeister_schreier_index2(const GroupPresentation& g);

// alpha restricted to the kernel and halved, which is the abelianization of
// the kernel when the parent is a quotient knot. Throws ValidationError if
// the kernel's H_1 is not Z.
Abelianization restrict_abelianization(const Abelianization& parent,
                                       const KernelPresentation& kernel);

}  // namespace pgate
