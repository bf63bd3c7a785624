#include <pgate/detail/dense.hpp>
#include <pgate/detail/zassenhaus.hpp>
#include <pgate/error.hpp>
#include <pgate/factor.hpp>

#include <algorithm>
#include <sstream>

namespace pgate {
namespace {

detail::QPoly rational_coeffs(const Polynomial& p) {
  detail::QPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.rational_part());
  return out;
}

void sort_factors(std::vector<std::pair<Polynomial, int>>& factors) {
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    return compare(a.first, b.first) < 0;
  });
}

// Monic factors over Q of a nonzero rational polynomial, lifted back to the
// given field.
std::vector<std::pair<Polynomial, int>> rational_factors(const FieldPtr& field,
                                                         const detail::QPoly& p,
                                                         std::uint64_t seed) {
  std::vector<std::pair<Polynomial, int>> out;
  for (auto& [z, mult] : detail::factor_integer_polynomial(detail::primitive_integer(p), seed)) {
    out.emplace_back(Polynomial::from_rationals(field, detail::monic(detail::to_rational(z))),
                     mult);
  }
  return out;
}

// Factors of a monic squarefree polynomial over a proper extension of Q.
std::vector<Polynomial> trager_squarefree(const Polynomial& g, std::uint64_t seed) {
  if (g.degree() <= 1) return {g};
  const FieldPtr& K = g.field();
  const FieldElement z = FieldElement::generator(K);
  for (long step = 0;; ++step) {
    // s = 0, 1, -1, 2, -2, ...
    const long s = step == 0 ? 0 : (step % 2 == 1 ? (step + 1) / 2 : -(step / 2));
    Polynomial h = s == 0 ? g : g.shift_variable(z * Rational(-s));
    detail::QPoly n = rational_coeffs(norm(h));
    detail::ZPoly nz = detail::primitive_integer(n);
    if (!detail::is_squarefree(nz)) continue;

    auto qfactors = detail::factor_integer_polynomial(nz, seed);
    if (qfactors.size() == 1) return {g};
    std::vector<Polynomial> out;
    Polynomial rest = h;
    for (const auto& [f, mult] : qfactors) {
      Polynomial lifted = Polynomial::from_rationals(K, detail::to_rational(f));
      Polynomial piece = gcd(rest, lifted);
      if (piece.degree() < 1) continue;
      rest = exact_quotient(rest, piece);
      out.push_back(s == 0 ? piece : piece.shift_variable(z * Rational(s)).monic());
    }
    if (rest.degree() >= 1) {
      throw ArithmeticError("factorization over the number field did not close");
    }
    return out;
  }
}

}  // namespace

Polynomial Factorization::expand() const {
  Polynomial r = Polynomial::constant(unit);
  for (const auto& [f, m] : factors) r *= f.pow(m);
  return r;
}

std::string Factorization::to_string(const std::string& var) const {
  std::ostringstream out;
  const bool unit_shown = !unit.is_one() || factors.empty();
  if (unit_shown) {
    const std::string u = unit.to_string();
    if (u.find(' ') == std::string::npos) {
      out << u;
    } else {
      out << "(" << unit.to_string() << ")";
    }
  }
  bool first = !unit_shown;
  for (const auto& [f, m] : factors) {
    if (!first) out << " * ";
    first = false;
    out << "(" << f.to_string(var) << ")";
    if (m > 1) out << "^" << m;
  }
  return out.str();
}

Factorization factor_over_q(const Polynomial& p, const FactorOptions& opts) {
  if (p.is_zero()) throw ArithmeticError("cannot factor the zero polynomial");
  if (!p.field()->is_rationals()) {
    throw ArithmeticError("factor_over_q needs a polynomial over Q");
  }
  Factorization out{p.leading(), {}};
  if (p.degree() >= 1) out.factors = rational_factors(p.field(), rational_coeffs(p), opts.seed);
  sort_factors(out.factors);
  return out;
}

Factorization factor_over_nf(const Polynomial& p, const FactorOptions& opts) {
  if (p.field()->is_rationals()) return factor_over_q(p, opts);
  if (p.is_zero()) throw ArithmeticError("cannot factor the zero polynomial");
  Factorization out{p.leading(), {}};
  const int v = p.valuation();
  Polynomial rest = p;
  if (v > 0) {
    out.factors.emplace_back(Polynomial::variable(p.field()), v);
    rest = Polynomial(p.field(),
                      std::vector<FieldElement>(p.coeffs().begin() + v, p.coeffs().end()));
  }
  for (const auto& [part, mult] : squarefree_decomposition(rest)) {
    for (auto& g : trager_squarefree(part, opts.seed)) out.factors.emplace_back(g, mult);
  }
  sort_factors(out.factors);
  return out;
}

bool is_irreducible(const Polynomial& p, const FactorOptions& opts) {
  if (p.degree() < 1) {
    throw ArithmeticError("irreducibility is undefined for constants");
  }
  if (p.degree() == 1) return true;
  Factorization f = factor_over_nf(p, opts);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

std::optional<FieldElement> sqrt_in_field(const FieldElement& c, const FactorOptions& opts) {
  const FieldPtr& K = c.field();
  if (c.is_zero()) return FieldElement(K);
  if (c.is_rational()) {
    const Rational& q = c.rational_part();
    if (q > 0 && mpz_perfect_square_p(q.get_num_mpz_t()) &&
        mpz_perfect_square_p(q.get_den_mpz_t())) {
      Integer a = sqrt(Integer(q.get_num()));
      Integer b = sqrt(Integer(q.get_den()));
      return FieldElement(K, Rational(a, b));
    }
    if (K->is_rationals()) return std::nullopt;
  }
  Polynomial x2 = Polynomial::monomial(FieldElement(K, 1L), 2) - Polynomial::constant(c);
  for (const auto& [f, m] : factor_over_nf(x2, opts).factors) {
    if (f.degree() == 1) return -f.coeff(0);
  }
  return std::nullopt;
}

}  // namespace pgate
