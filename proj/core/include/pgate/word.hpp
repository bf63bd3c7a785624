#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace pgate {

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A freely reduced word in the generators of a presentation.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces

  static Word generator(int g, int exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(int e) const;

  // Sum of exponents of generator g.
  int exponent_sum(int g) const;

  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;

  // Space-separated, uppercase for inverses: "a b A B".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Letter> letters_;
};

// A formal Z-linear combination of group elements, i.e. an element of the
// integral group ring of the free group.
using GroupRingElement = std::map<Word, long>;

// Fox free derivative of w with respect to generator g:
// d(uv)/dg = du/dg + u dv/dg, dg/dg = 1, d(g^-1)/dg = -g^-1.
GroupRingElement fox_derivative(const Word& w, int g);

}  // namespace pgate
