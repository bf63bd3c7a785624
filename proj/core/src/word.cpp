#include <pgate/word.hpp>

#include <cctype>

namespace pgate {

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back().generator == l.generator &&
        letters_.back().exponent == -l.exponent) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(int g, int exponent) {
  std::vector<Letter> v;
  const int sign = exponent < 0 ? -1 : 1;
  for (int i = 0; i < exponent * sign; ++i) v.push_back({g, sign});
  return Word(std::move(v));
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    r.letters_.push_back({it->generator, -it->exponent});
  }
  return r;
}

Word Word::pow(int e) const {
  const Word base = e < 0 ? inverse() : *this;
  Word r;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
  return r;
}

int Word::exponent_sum(int g) const {
  int s = 0;
  for (const Letter& l : letters_) {
    if (l.generator == g) s += l.exponent;
  }
  return s;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> v(a.letters_);
  v.insert(v.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(v));
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    std::string name = names.at(l.generator);
    if (l.exponent < 0) {
      for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    out += name;
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, int g) {
  GroupRingElement out;
  std::vector<Letter> prefix;
  for (const Letter& l : w.letters()) {
    if (l.generator == g) {
      if (l.exponent > 0) {
        out[Word(prefix)] += 1;
      } else {
        std::vector<Letter> with(prefix);
        with.push_back(l);
        out[Word(std::move(with))] -= 1;
      }
    }
    prefix.push_back(l);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace pgate
