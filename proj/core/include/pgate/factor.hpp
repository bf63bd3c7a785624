#pragma once

#include <pgate/polynomial.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pgate {

struct FactorOptions {
  // Seeds the randomized equal-degree splitting. Factorizations are unique,
  // so the seed only affects running time, never the result.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct Factorization {
  FieldElement unit;
  // Monic irreducible factors, sorted by compare(), with multiplicities.
  std::vector<std::pair<Polynomial, int>> factors;

  Polynomial expand() const;
  std::string to_string(const std::string& var = "t") const;
};

// Irreducible factorization of a polynomial over the rationals (the
// degree-one field). Throws on zero input.
Factorization factor_over_q(const Polynomial& p, const FactorOptions& opts = {});

// Irreducible factorization over the polynomial's coefficient field:
// squarefree decomposition, then for each part a shift s with
// Norm(p(t - s z)) squarefree, factorization of that norm over Q and
// recovery of the field factors by gcd.
Factorization factor_over_nf(const Polynomial& p, const FactorOptions& opts = {});

// Throws ArithmeticError for constants.
bool is_irreducible(const Polynomial& p, const FactorOptions& opts = {});

// Some r with r^2 = c, or nothing when c is not a square in its field.
std::optional<FieldElement> sqrt_in_field(const FieldElement& c,
                                          const FactorOptions& opts = {});

}  // namespace pgate
