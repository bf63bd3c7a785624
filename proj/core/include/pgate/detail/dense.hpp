#pragma once

// Dense coefficient vectors over Q and Z, lowest degree first. These are the
// workhorses behind the number-field arithmetic, the field norm and the
// rational factorizer; the public surface goes through Polynomial.

#include <pgate/rational.hpp>

#include <utility>
#include <vector>

namespace pgate::detail {

using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

void trim(QPoly& p);
void trim(ZPoly& p);

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

// --- Q[x] -------------------------------------------------------------------

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
QPoly derivative(const QPoly& a);
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(QPoly a, QPoly b);

// Returns (g, s) with g = gcd(a, b) monic and s*a = g (mod b).
std::pair<QPoly, QPoly> half_xgcd(QPoly a, QPoly b);

Rational evaluate(const QPoly& p, const Rational& x);

// Yun decomposition of a nonzero polynomial: monic squarefree parts with
// multiplicities, parts of degree zero omitted.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

// --- Z[x] -------------------------------------------------------------------

Integer content(const ZPoly& p);

// Clears denominators and content; the leading coefficient of the result is
// positive. Zero maps to zero.
ZPoly primitive_integer(const QPoly& p);
ZPoly primitive_part(const ZPoly& p);

QPoly to_rational(const ZPoly& p);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly zderivative(const ZPoly& a);

// Exact division in Z[x]; returns false when b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly* quotient);

// Exact division that the caller knows succeeds (fraction-free elimination).
ZPoly zdiv_exact(const ZPoly& a, const ZPoly& b);

// Squarefreeness test over Q; cheap modular certificates are tried before
// falling back to a rational gcd.
bool is_squarefree(const ZPoly& p);

}  // namespace pgate::detail
