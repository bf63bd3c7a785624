#pragma once

// Polynomials over the prime field F_p for word-sized odd primes p.
// Used only inside the factorizer (Zassenhaus) and for modular
// squarefreeness certificates.

#include <pgate/detail/dense.hpp>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace pgate::detail::modp {

using Poly = std::vector<std::uint64_t>;

class Field {
 public:
  explicit Field(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const Integer& v) const;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

void trim(Poly& p);
inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly reduce(const Field& F, const ZPoly& p);
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, std::uint64_t c);
Poly derivative(const Field& F, const Poly& a);
std::pair<Poly, Poly> divrem(const Field& F, const Poly& a, const Poly& b);
Poly rem(const Field& F, const Poly& a, const Poly& b);
Poly make_monic(const Field& F, const Poly& a);
Poly gcd(const Field& F, Poly a, Poly b);

// s*a + t*b = 1 for coprime a, b with deg s < deg b, deg t < deg a.
std::pair<Poly, Poly> bezout(const Field& F, const Poly& a, const Poly& b);

// base^e mod m, e given as an arbitrary-precision integer.
Poly powmod(const Field& F, const Poly& base, const Integer& e, const Poly& m);

// Distinct-degree factorization of a monic squarefree polynomial:
// (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Field& F, Poly f);

// Splits a monic product of irreducibles all of degree d (Cantor-Zassenhaus).
std::vector<Poly> equal_degree(const Field& F, const Poly& g, int d,
                               std::mt19937_64& rng);

// Monic irreducible factors of a monic squarefree polynomial, sorted.
std::vector<Poly> factor_squarefree(const Field& F, const Poly& f,
                                    std::mt19937_64& rng);

}  // namespace pgate::detail::modp
