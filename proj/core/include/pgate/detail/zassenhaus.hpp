#pragma once

#include <pgate/detail/dense.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace pgate::detail {

// Irreducible factors over Z of a squarefree primitive polynomial with
// positive leading coefficient and nonzero constant term. Modular
// factorization at a well-chosen prime, multifactor Hensel lifting to a
// Landau-Mignotte bound, then subset recombination pruned by the degree sets
// of several primes and by trailing coefficients.
std::vector<ZPoly> zassenhaus(const ZPoly& f, std::uint64_t seed);

// Full factorization of a nonzero integer polynomial into primitive
// irreducibles (positive leading coefficients) with multiplicities. The
// content and sign are dropped.
std::vector<std::pair<ZPoly, int>> factor_integer_polynomial(
    const ZPoly& f, std::uint64_t seed);

}  // namespace pgate::detail
