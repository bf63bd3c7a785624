#include <pgate/detail/modp.hpp>
#include <pgate/error.hpp>

#include <algorithm>

namespace pgate::detail::modp {

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw ArithmeticError("inverse of zero modulo p");
  return pow(a, p_ - 2);
}

std::uint64_t Field::reduce(const Integer& v) const {
  return mpz_fdiv_ui(v.get_mpz_t(), p_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly reduce(const Field& F, const ZPoly& p) {
  Poly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = F.reduce(p[i]);
  trim(r);
  return r;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  const std::uint64_t p = F.modulus();
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  // Products are below p^2 < 2^64 for the primes used here, so several can
  // be summed in 128 bits before reducing.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % p);
  trim(r);
  return r;
}

Poly scale(const Field& F, const Poly& a, std::uint64_t c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

Poly derivative(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.modulus());
  trim(r);
  return r;
}

std::pair<Poly, Poly> divrem(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw ArithmeticError("polynomial division by zero modulo p");
  Poly r(a);
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  std::uint64_t inv = F.inv(b.back());
  for (int k = degree(r) - degree(b); k >= 0; --k) {
    std::uint64_t c = F.mul(r[k + b.size() - 1], inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Field& F, const Poly& a, const Poly& b) {
  if (a.size() < b.size()) {
    Poly r(a);
    trim(r);
    return r;
  }
  return divrem(F, a, b).second;
}

Poly make_monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

std::pair<Poly, Poly> bezout(const Field& F, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(F, r0, r1);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    Poly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) throw ArithmeticError("bezout: inputs are not coprime modulo p");
  std::uint64_t inv = F.inv(r0[0]);
  return {scale(F, s0, inv), scale(F, t0, inv)};
}

Poly powmod(const Field& F, const Poly& base, const Integer& e, const Poly& m) {
  Poly result{1};
  result = rem(F, result, m);
  Poly b = rem(F, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(F, mul(F, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(F, mul(F, result, b), m);
  }
  return result;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Field& F, Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1};
  Poly h = rem(F, x, f);
  Integer p(static_cast<unsigned long>(F.modulus()));
  int d = 0;
  while (2 * (d + 1) <= degree(f)) {
    ++d;
    h = powmod(F, h, p, f);
    Poly g = gcd(F, sub(F, h, x), f);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divrem(F, f, g).first;
      h = rem(F, h, f);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

std::vector<Poly> equal_degree(const Field& F, const Poly& g, int d,
                               std::mt19937_64& rng) {
  const int n = degree(g);
  if (n == d) return {g};
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), F.modulus(), static_cast<unsigned long>(d));
  Integer e = (q - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, F.modulus() - 1);
  while (true) {
    Poly a(n);
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g1 = gcd(F, a, g);
    if (degree(g1) > 0 && degree(g1) < n) {
      auto left = equal_degree(F, g1, d, rng);
      auto right = equal_degree(F, divrem(F, g, g1).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    Poly b = powmod(F, a, e, g);
    b = sub(F, b, Poly{1});
    Poly g2 = gcd(F, b, g);
    if (degree(g2) > 0 && degree(g2) < n) {
      auto left = equal_degree(F, g2, d, rng);
      auto right = equal_degree(F, divrem(F, g, g2).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Poly> factor_squarefree(const Field& F, const Poly& f,
                                    std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& [g, d] : distinct_degree(F, make_monic(F, f))) {
    auto parts = equal_degree(F, g, d, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace pgate::detail::modp
