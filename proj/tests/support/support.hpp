#pragma once

#include <pgate/expression.hpp>
#include <pgate/factor.hpp>
#include <pgate/number_field.hpp>
#include <pgate/polynomial.hpp>
#include <pgate/sl2.hpp>
#include <pgate/word.hpp>

#include <random>
#include <string>
#include <vector>

namespace pgate::testing {

inline FieldPtr field(const std::string& min_poly) { return parse_field("z", min_poly); }

inline Polynomial poly(const FieldPtr& K, const std::string& s) {
  return parse_polynomial(K, s);
}

inline Polynomial qpoly(const std::string& s) {
  return parse_polynomial(NumberField::rationals(), s);
}

// Fields of degree <= 4 used by the randomized suites.
inline std::vector<FieldPtr> small_fields() {
  return {NumberField::rationals(), field("z^2 + 1"), field("z^2 - 3"),
          field("z^3 + z - 1"), field("z^4 + 1")};
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long range = 5, long max_den = 3) {
    return make_rational(integer(-range, range), integer(1, max_den));
  }

  FieldElement element(const FieldPtr& K, long range = 5, long max_den = 1) {
    std::vector<Rational> c;
    for (int i = 0; i < K->degree(); ++i) c.push_back(rational(range, max_den));
    return FieldElement(K, std::move(c));
  }

  FieldElement nonzero(const FieldPtr& K, long range = 5, long max_den = 1) {
    for (;;) {
      FieldElement e = element(K, range, max_den);
      if (!e.is_zero()) return e;
    }
  }

  Polynomial polynomial(const FieldPtr& K, int degree, long range = 5, long max_den = 1) {
    std::vector<FieldElement> c;
    for (int i = 0; i < degree; ++i) c.push_back(element(K, range, max_den));
    c.push_back(nonzero(K, range, max_den));
    return Polynomial(K, std::move(c));
  }

  Polynomial monic(const FieldPtr& K, int degree, long range = 5) {
    Polynomial p = polynomial(K, degree, range);
    return p.monic();
  }

  Word word(int generators, int max_length) {
    std::vector<Letter> v;
    const int n = static_cast<int>(integer(0, max_length));
    for (int i = 0; i < n; ++i) {
      v.push_back({static_cast<int>(integer(0, generators - 1)), integer(0, 1) ? 1 : -1});
    }
    return Word(std::move(v));
  }

  // Product of elementary unipotent matrices, so the determinant is one by
  // construction rather than by the code under test.
  Matrix2 sl2(const FieldPtr& K, int factors = 4) {
    Matrix2 m = Matrix2::identity(K);
    const FieldElement zero(K), one(K, 1L);
    for (int i = 0; i < factors; ++i) {
      const FieldElement x = element(K, 3, 2);
      m = m * (i % 2 == 0 ? Matrix2{one, x, zero, one} : Matrix2{one, zero, x, one});
    }
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pgate::testing
