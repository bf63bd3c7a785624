#pragma once

#include <pgate/word.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pgate {

enum class GroupKind { SphereKnot, QuotientKnot, Generic };

std::string to_string(GroupKind kind);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // For sphere knots: meridian m and longitude l. For quotient knots: the
  // class alpha generating H_1 and the homological longitude lbar.
  std::optional<Word> meridian;
  std::optional<Word> longitude;
  GroupKind kind = GroupKind::Generic;

  int num_generators() const { return static_cast<int>(generators.size()); }
  int num_relators() const { return static_cast<int>(relators.size()); }
  int index_of(const std::string& name) const;  // -1 when absent

  std::string word_to_string(const Word& w) const {
    return w.to_string(generators);
  }
  // Serializes back to the grammar accepted by parse_presentation.
  std::string to_string() const;
};

// Grammar (sections separated by ';' or newlines):
//   gens: a b c ; rel: <word> ; rel: <word> ; meridian: <word> ;
//   longitude: <word> ; kind: sphere-knot|quotient-knot|generic
// Word tokens are separated by spaces: a generator name, its uppercase for
// the inverse, or either followed by ^k. When every generator name is a
// single character, unspaced runs such as "abAB" are accepted too. A bare
// "rel:" declares an empty relator list. Throws ParseError with positions.
GroupPresentation parse_presentation(std::string_view text);

// Parses a single word against known generator names.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace pgate
