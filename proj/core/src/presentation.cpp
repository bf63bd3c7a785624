#include <pgate/error.hpp>
#include <pgate/presentation.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace pgate {
namespace {

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

bool is_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Lookup {
  const std::vector<std::string>& names;
  bool single_char;

  // generator index and sign, or {-1, 0}
  std::pair<int, int> find(const std::string& token) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == token) return {static_cast<int>(i), 1};
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (upper(names[i]) == token) return {static_cast<int>(i), -1};
    }
    return {-1, 0};
  }
};

// Parses "^k" at text[pos] when present; returns 1 otherwise.
long parse_exponent(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '^') return 1;
  const std::size_t caret = pos++;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start || pos - start > 6) {
    throw ParseError("malformed exponent", 0, caret + 1);
  }
  const long k = std::stol(std::string(text.substr(start, pos - start)));
  return negative ? -k : k;
}

}  // namespace

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::SphereKnot:
      return "sphere-knot";
    case GroupKind::QuotientKnot:
      return "quotient-knot";
    case GroupKind::Generic:
      return "generic";
  }
  return "generic";
}

int GroupPresentation::index_of(const std::string& name) const {
  for (int i = 0; i < num_generators(); ++i) {
    if (generators[i] == name) return i;
  }
  return -1;
}

std::string GroupPresentation::to_string() const {
  std::string out = "gens:";
  for (const auto& g : generators) out += " " + g;
  if (relators.empty()) out += "; rel:";
  for (const auto& r : relators) out += "; rel: " + word_to_string(r);
  if (meridian) out += "; meridian: " + word_to_string(*meridian);
  if (longitude) out += "; longitude: " + word_to_string(*longitude);
  out += "; kind: " + pgate::to_string(kind);
  return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Lookup lookup{names, std::all_of(names.begin(), names.end(),
                                   [](const std::string& n) { return n.size() == 1; })};
  std::vector<Letter> letters;
  auto append = [&](int g, int sign, long e) {
    const long n = e < 0 ? -e : e;
    const int s = e < 0 ? -sign : sign;
    for (long i = 0; i < n; ++i) letters.push_back({g, s});
  };

  std::size_t pos = 0;
  bool any = false;
  while (true) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    any = true;
    const std::size_t start = pos;
    if (text[pos] == '1') {
      ++pos;
      if (pos < text.size() && !is_space(text[pos])) {
        throw ParseError("unexpected character after identity '1'", 0, pos + 1);
      }
      continue;
    }
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) {
      throw ParseError(std::string("unexpected '") + text[pos] + "'", 0, pos + 1);
    }
    const std::string token(text.substr(start, pos - start));
    auto [g, sign] = lookup.find(token);
    if (g >= 0) {
      append(g, sign, parse_exponent(text, pos));
    } else if (lookup.single_char) {
      // Unspaced run of one-character generators; an exponent binds to the
      // last letter only.
      for (std::size_t i = 0; i < token.size(); ++i) {
        auto [h, s] = lookup.find(std::string(1, token[i]));
        if (h < 0) {
          throw ParseError("unknown generator '" + std::string(1, token[i]) + "'", 0,
                           start + i + 1);
        }
        append(h, s, i + 1 == token.size() ? parse_exponent(text, pos) : 1);
      }
    } else {
      throw ParseError("unknown generator '" + token + "'", 0, start + 1);
    }
    if (pos < text.size() && !is_space(text[pos])) {
      throw ParseError(std::string("unexpected '") + text[pos] + "'", 0, pos + 1);
    }
  }
  if (!any) throw ParseError("empty word", 0, 1);
  return Word(std::move(letters));
}

GroupPresentation parse_presentation(std::string_view text) {
  struct Section {
    std::string key;
    std::string_view value;
    std::size_t line;
    std::size_t key_column;
    std::size_t value_column;  // 1-based column of value[0] minus one
  };
  std::vector<Section> sections;

  std::size_t line = 1, line_start = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = pos;
    while (end < text.size() && text[end] != ';' && text[end] != '\n') ++end;
    std::string_view piece = text.substr(pos, end - pos);
    std::size_t lead = 0;
    while (lead < piece.size() && is_space(piece[lead])) ++lead;
    if (lead < piece.size()) {
      const std::size_t colon = piece.find(':');
      const std::size_t column = pos + lead - line_start + 1;
      if (colon == std::string_view::npos) {
        throw ParseError("expected 'key:' in section", line, column);
      }
      std::string key(piece.substr(lead, colon - lead));
      while (!key.empty() && is_space(key.back())) key.pop_back();
      sections.push_back({key, piece.substr(colon + 1), line, column,
                          pos + colon + 1 - line_start});
    }
    if (end >= text.size()) break;
    if (text[end] == '\n') {
      ++line;
      line_start = end + 1;
    }
    pos = end + 1;
  }

  GroupPresentation g;
  bool have_gens = false, have_rel = false;
  auto blank = [](std::string_view v) {
    return std::all_of(v.begin(), v.end(), [](char c) { return is_space(c); });
  };
  auto word_at = [&](const Section& s) {
    try {
      return parse_word(s.value, g.generators);
    } catch (const ParseError& e) {
      throw e.relocated(s.line, s.value_column);
    }
  };

  for (const Section& s : sections) {
    if (s.key == "gens") {
      if (have_gens) throw ParseError("duplicate 'gens' section", s.line, s.key_column);
      have_gens = true;
      std::size_t p = 0;
      while (p < s.value.size()) {
        while (p < s.value.size() && is_space(s.value[p])) ++p;
        const std::size_t start = p;
        while (p < s.value.size() && !is_space(s.value[p])) ++p;
        if (start == p) break;
        std::string name(s.value.substr(start, p - start));
        const std::size_t col = s.value_column + start + 1;
        if (!is_name(name)) {
          throw ParseError("invalid generator name '" + name + "'", s.line, col);
        }
        if (upper(name) == name) {
          throw ParseError("generator names need a lowercase letter, '" + name +
                               "' would be its own inverse",
                           s.line, col);
        }
        for (const auto& other : g.generators) {
          if (other == name || upper(other) == upper(name)) {
            throw ParseError("duplicate generator '" + name + "'", s.line, col);
          }
        }
        g.generators.push_back(std::move(name));
      }
      if (g.generators.empty()) {
        throw ParseError("no generators declared", s.line, s.key_column);
      }
      continue;
    }
    if (!have_gens && (s.key == "rel" || s.key == "meridian" || s.key == "longitude")) {
      throw ParseError("'" + s.key + "' before 'gens'", s.line, s.key_column);
    }
    if (s.key == "rel") {
      have_rel = true;
      if (!blank(s.value)) g.relators.push_back(word_at(s));
    } else if (s.key == "meridian") {
      g.meridian = word_at(s);
    } else if (s.key == "longitude") {
      g.longitude = word_at(s);
    } else if (s.key == "kind") {
      std::string v(s.value);
      const std::size_t lead = std::min(v.find_first_not_of(" \t\r"), v.size());
      v.erase(0, lead);
      v.erase(v.find_last_not_of(" \t\r") + 1);
      if (v == "sphere-knot") {
        g.kind = GroupKind::SphereKnot;
      } else if (v == "quotient-knot") {
        g.kind = GroupKind::QuotientKnot;
      } else if (v == "generic") {
        g.kind = GroupKind::Generic;
      } else {
        throw ParseError("unknown kind '" + v + "'", s.line, s.value_column + lead + 1);
      }
    } else {
      throw ParseError("unknown section '" + s.key + "'", s.line, s.key_column);
    }
  }
  if (!have_gens) throw ParseError("missing 'gens' section", 1, 1);
  if (!have_rel) throw ParseError("missing 'rel' section", 1, 1);
  return g;
}

}  // namespace pgate
