#include <pgate/detail/dense.hpp>
#include <pgate/detail/modp.hpp>
#include <pgate/error.hpp>

#include <algorithm>

namespace pgate::detail {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw ArithmeticError("polynomial division by zero");
  QPoly r(a);
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  Rational inv_lead = 1 / b.back();
  for (int k = degree(r) - degree(b); k >= 0; --k) {
    Rational c = r[k + b.size() - 1] * inv_lead;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

QPoly monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, 1 / a.back());
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divrem(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

std::pair<QPoly, QPoly> half_xgcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  QPoly s0{Rational(1)}, s1{};
  while (!b.empty()) {
    auto [q, r] = divrem(a, b);
    QPoly s2 = sub(s0, mul(q, s1));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (a.empty()) return {{}, {}};
  Rational inv = 1 / a.back();
  return {scale(a, inv), scale(s0, inv)};
}

Rational evaluate(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  QPoly f = monic(p);
  if (degree(f) < 1) return out;
  QPoly fp = derivative(f);
  QPoly a = gcd(f, fp);
  QPoly b = divrem(f, a).first;
  QPoly c = divrem(fp, a).first;
  QPoly d = sub(c, derivative(b));
  int i = 1;
  while (degree(b) >= 1) {
    QPoly g = gcd(b, d);
    if (degree(g) >= 1) out.emplace_back(g, i);
    b = divrem(b, g).first;
    c = divrem(d, g).first;
    d = sub(c, derivative(b));
    ++i;
  }
  return out;
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_integer(const QPoly& p) {
  QPoly q(p);
  trim(q);
  if (q.empty()) return {};
  Integer den = 1;
  for (const auto& c : q) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  ZPoly z(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    z[i] = q[i].get_num() * (den / q[i].get_den());
  }
  return primitive_part(z);
}

ZPoly primitive_part(const ZPoly& p) {
  ZPoly z(p);
  trim(z);
  if (z.empty()) return z;
  Integer g = content(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

QPoly to_rational(const ZPoly& p) {
  QPoly q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rational(p[i]);
  return q;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly zderivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

bool zdivides(const ZPoly& a_in, const ZPoly& b, ZPoly* quotient) {
  if (b.empty()) throw ArithmeticError("polynomial division by zero");
  ZPoly a(a_in);
  trim(a);
  if (a.empty()) {
    if (quotient) quotient->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  // Cheap necessary condition on the constant terms.
  if (b[0] != 0 && a[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) {
    return false;
  }
  ZPoly q(a.size() - b.size() + 1);
  const Integer& lead = b.back();
  for (int k = degree(a) - degree(b); k >= 0; --k) {
    Integer& top = a[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(a[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    q[k] = std::move(c);
  }
  for (std::size_t j = 0; j + 1 < b.size(); ++j) {
    if (a[j] != 0) return false;
  }
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  return true;
}

ZPoly zdiv_exact(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!zdivides(a, b, &q)) throw ArithmeticError("inexact integer polynomial division");
  return q;
}

bool is_squarefree(const ZPoly& p_in) {
  ZPoly p(p_in);
  trim(p);
  if (degree(p) < 1) return true;
  // A prime not dividing the leading coefficient for which p stays
  // squarefree certifies squarefreeness over Q.
  int tried = 0;
  for (std::uint64_t q = 1000003; tried < 4; q += 2) {
    if (!modp::is_prime(q)) continue;
    ++tried;
    modp::Field F(q);
    if (F.reduce(p.back()) == 0) continue;
    modp::Poly pm = modp::reduce(F, p);
    modp::Poly g = modp::gcd(F, pm, modp::derivative(F, pm));
    if (modp::degree(g) == 0) return true;
  }
  QPoly q = to_rational(p);
  return degree(gcd(q, derivative(q))) == 0;
}

}  // namespace pgate::detail
