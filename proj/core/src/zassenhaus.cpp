#include <pgate/detail/modp.hpp>
#include <pgate/detail/zassenhaus.hpp>
#include <pgate/error.hpp>

#include <algorithm>
#include <limits>
#include <random>

namespace pgate::detail {
namespace {

// --- arithmetic in (Z/M)[x], residues kept in [0, M) -------------------------

ZPoly zmod(ZPoly a, const Integer& M) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  trim(a);
  return a;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly mulmod(const ZPoly& a, const ZPoly& b, const Integer& M) {
  return zmod(zmul(a, b), M);
}

// Division by a monic polynomial over Z/M.
std::pair<ZPoly, ZPoly> divrem_monic(ZPoly a, const ZPoly& h, const Integer& M) {
  trim(a);
  if (a.size() < h.size()) return {{}, a};
  ZPoly q(a.size() - h.size() + 1);
  for (int k = degree(a) - degree(h); k >= 0; --k) {
    Integer c = a[k + h.size() - 1];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < h.size(); ++j) {
      mpz_submul(a[k + j].get_mpz_t(), c.get_mpz_t(), h[j].get_mpz_t());
    }
  }
  a.resize(h.size() - 1);
  return {zmod(q, M), zmod(a, M)};
}

ZPoly lift_residues(const modp::Poly& p) {
  ZPoly z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) z[i] = static_cast<unsigned long>(p[i]);
  return z;
}

// One quadratic Hensel step (von zur Gathen-Gerhard): from f = g h and
// s g + t h = 1 modulo m to the same modulo M, where m | M | m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t,
                 const Integer& M) {
  ZPoly e = zmod(zsub(f, zmul(g, h)), M);
  auto [q, r] = divrem_monic(mulmod(s, e, M), h, M);
  ZPoly g2 = zmod(zadd(zadd(g, zmul(t, e)), zmul(q, g)), M);
  ZPoly h2 = zmod(zadd(h, r), M);
  ZPoly b = zmod(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{Integer(1)}), M);
  auto [c, d] = divrem_monic(mulmod(s, b, M), h2, M);
  s = zmod(zsub(s, d), M);
  t = zmod(zsub(zsub(t, zmul(t, b)), zmul(c, g2)), M);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc(f) * prod(factors) from p to P = p^k; appends monic lifts.
void hensel_tree(const ZPoly& f, const std::vector<modp::Poly>& factors,
                 std::uint64_t p, const Integer& P, std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), P.get_mpz_t())) {
      throw ArithmeticError("Hensel lifting: leading coefficient not invertible");
    }
    ZPoly m = f;
    for (auto& c : m) c *= inv;
    out.push_back(zmod(std::move(m), P));
    return;
  }
  const modp::Field F(p);
  const std::size_t half = factors.size() / 2;
  std::vector<modp::Poly> left(factors.begin(), factors.begin() + half);
  std::vector<modp::Poly> right(factors.begin() + half, factors.end());

  modp::Poly g0{F.reduce(f.back())};
  for (const auto& x : left) g0 = modp::mul(F, g0, x);
  modp::Poly h0{1};
  for (const auto& x : right) h0 = modp::mul(F, h0, x);
  auto [s0, t0] = modp::bezout(F, g0, h0);

  ZPoly g = lift_residues(g0), h = lift_residues(h0);
  ZPoly s = lift_residues(s0), t = lift_residues(t0);
  Integer m(static_cast<unsigned long>(p));
  while (m < P) {
    Integer M = m * m;
    if (M > P) M = P;
    hensel_step(zmod(f, M), g, h, s, t, M);
    m = M;
  }
  hensel_tree(g, left, p, P, out);
  hensel_tree(h, right, p, P, out);
}

Integer symmetric(const Integer& x, const Integer& P, const Integer& half) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
  if (r > half) r -= P;
  return r;
}

ZPoly symmetric(const ZPoly& a, const Integer& P, const Integer& half) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = symmetric(a[i], P, half);
  trim(r);
  return r;
}

bool only_trivial(const std::vector<char>& allowed) {
  for (std::size_t d = 1; d + 1 < allowed.size(); ++d) {
    if (allowed[d]) return false;
  }
  return true;
}

bool advance(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

void sort_factors(std::vector<ZPoly>& v) {
  std::sort(v.begin(), v.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly& f, std::uint64_t seed) {
  const int n = degree(f);
  if (n <= 1) return {f};

  // Prime selection. Every prime's factor-degree pattern constrains the
  // degrees a true factor can have; the intersection often proves
  // irreducibility outright.
  std::vector<char> allowed(n + 1, 1);
  const int wanted = n <= 3 ? 2 : (n <= 12 ? 8 : 24);
  int good = 0;
  std::uint64_t best_p = 0;
  std::vector<std::pair<modp::Poly, int>> best_ddf;
  std::size_t best_count = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t p = 3; good < wanted; p += 2) {
    if (!modp::is_prime(p)) continue;
    const modp::Field F(p);
    if (F.reduce(f.back()) == 0) continue;
    modp::Poly fm = modp::make_monic(F, modp::reduce(F, f));
    if (modp::degree(modp::gcd(F, fm, modp::derivative(F, fm))) > 0) continue;
    ++good;
    auto ddf = modp::distinct_degree(F, fm);
    std::size_t count = 0;
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (const auto& [g, d] : ddf) {
      const int copies = modp::degree(g) / d;
      count += copies;
      for (int c = 0; c < copies; ++c) {
        for (int s = n - d; s >= 0; --s) {
          if (reach[s]) reach[s + d] = 1;
        }
      }
    }
    for (int s = 0; s <= n; ++s) allowed[s] = allowed[s] && reach[s];
    if (count == 1 || only_trivial(allowed)) return {f};
    if (count < best_count) {
      best_count = count;
      best_p = p;
      best_ddf = std::move(ddf);
    }
  }

  const modp::Field F(best_p);
  std::mt19937_64 rng(seed);
  std::vector<modp::Poly> modular;
  for (const auto& [g, d] : best_ddf) {
    auto parts = modp::equal_degree(F, g, d, rng);
    modular.insert(modular.end(), parts.begin(), parts.end());
  }

  // Landau-Mignotte: a factor g of f has |g|_1 <= 2^deg(g) |f|_2, and the
  // recombined candidates are g scaled by at most |lc(f)|.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = abs(f.back()) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  Integer P(static_cast<unsigned long>(best_p));
  const Integer p_big = P;
  while (P <= 2 * bound) P *= p_big;
  const Integer half = P / 2;

  std::vector<ZPoly> lifted;
  hensel_tree(f, modular, best_p, P, lifted);

  std::vector<ZPoly> result;
  ZPoly current = f;
  std::vector<int> remaining(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) remaining[i] = static_cast<int>(i);

  int size = 1;
  while (2 * size <= static_cast<int>(remaining.size())) {
    bool found = false;
    const int r = static_cast<int>(remaining.size());
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    do {
      int deg = 0;
      for (int i : comb) deg += degree(lifted[remaining[i]]);
      if (!allowed[deg]) continue;

      const Integer lc = current.back();
      Integer trailing = lc;
      for (int i : comb) {
        trailing = symmetric(trailing * lifted[remaining[i]][0], P, half);
      }
      if (trailing == 0) continue;
      Integer target = lc * current[0];
      if (!mpz_divisible_p(target.get_mpz_t(), trailing.get_mpz_t())) continue;

      ZPoly candidate{lc};
      for (int i : comb) {
        candidate = symmetric(zmul(candidate, lifted[remaining[i]]), P, half);
      }
      candidate = primitive_part(candidate);
      ZPoly quotient;
      if (!zdivides(current, candidate, &quotient)) continue;

      result.push_back(candidate);
      current = primitive_part(quotient);
      std::vector<int> rest;
      for (int i = 0, k = 0; i < r; ++i) {
        if (k < size && comb[k] == i) {
          ++k;
        } else {
          rest.push_back(remaining[i]);
        }
      }
      remaining = std::move(rest);
      found = true;
      break;
    } while (advance(comb, r));
    if (!found) ++size;
  }
  if (degree(current) > 0) result.push_back(current);
  sort_factors(result);
  return result;
}

std::vector<std::pair<ZPoly, int>> factor_integer_polynomial(const ZPoly& f_in,
                                                              std::uint64_t seed) {
  ZPoly f = primitive_part(f_in);
  if (f.empty()) throw ArithmeticError("cannot factor the zero polynomial");
  std::vector<std::pair<ZPoly, int>> out;
  std::size_t k = 0;
  while (k < f.size() && f[k] == 0) ++k;
  if (k > 0) {
    out.push_back({ZPoly{Integer(0), Integer(1)}, static_cast<int>(k)});
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (degree(f) < 1) return out;

  std::vector<std::pair<ZPoly, int>> parts;
  if (is_squarefree(f)) {
    parts.emplace_back(f, 1);
  } else {
    for (auto& [q, mult] : squarefree_decomposition(to_rational(f))) {
      parts.emplace_back(primitive_integer(q), mult);
    }
  }
  for (const auto& [part, mult] : parts) {
    for (auto& g : zassenhaus(part, seed)) out.emplace_back(std::move(g), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    if (a.first != b.first) {
      return std::lexicographical_compare(a.first.rbegin(), a.first.rend(),
                                          b.first.rbegin(), b.first.rend());
    }
    return a.second < b.second;
  });
  return out;
}

}  // namespace pgate::detail
