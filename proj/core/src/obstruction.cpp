#include <pgate/error.hpp>
#include <pgate/obstruction.hpp>

namespace pgate {
namespace {

bool is_even(const Polynomial& p) {
  for (int k = 1; k <= p.degree(); k += 2) {
    if (!p.coeffs()[k].is_zero()) return false;
  }
  return true;
}

// Positive first nonzero coordinate, so the reported f does not depend on
// which square root the factorizer found.
FieldElement canonical_root(const FieldElement& r) {
  for (const auto& c : r.coords()) {
    if (c == 0) continue;
    return c < 0 ? -r : r;
  }
  return r;
}

}  // namespace

std::string to_string(Verdict v) {
  return v == Verdict::Obstructed ? "OBSTRUCTED" : "CONSISTENT";
}

std::string to_string(LiftSelection l) {
  switch (l) {
    case LiftSelection::Plus:
      return "plus";
    case LiftSelection::Minus:
      return "minus";
    case LiftSelection::Both:
      return "both";
  }
  return "both";
}

Polynomial sigma_hat(const Polynomial& g) {
  Polynomial r = substitute_neg_t(g);
  return g.degree() % 2 == 1 ? -r : r;
}

// P = f(t) f(-t) up to a unit forces a pairing of the irreducible factors:
// sigma_hat permutes the monic irreducibles, and by unique factorization the
// factors of f(t) and of f(-t) are swapped by it. A sigma_hat-fixed factor
// therefore splits its multiplicity evenly between the two halves, while a
// pair g, sigma_hat(g) must appear equally often. Conversely such a pairing
// gives a monic F with F(t) F(-t) = (-1)^deg F monic(P), and f = d F works
// exactly when d^2 = (-1)^(deg P / 2) lead(P) up to the unit sign.
ObstructionReport check_pairing(const Polynomial& P, const FactorOptions& opts) {
  if (P.is_zero()) throw ArithmeticError("pairing check of the zero polynomial");
  if (!is_even(P)) throw ArithmeticError("pairing check needs an even polynomial");

  const FieldPtr& K = P.field();
  const int v = P.valuation();
  const Polynomial core(K, std::vector<FieldElement>(P.coeffs().begin() + v, P.coeffs().end()));

  ObstructionReport report;
  report.verdict = Verdict::Consistent;
  Factorization fac = factor_over_nf(core, opts);
  const auto& factors = fac.factors;

  Polynomial F = Polynomial::constant(FieldElement(K, 1L));
  std::vector<bool> used(factors.size(), false);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (used[i]) continue;
    const auto& [g, m] = factors[i];
    const Polynomial partner = sigma_hat(g);
    if (partner == g) {
      used[i] = true;
      if (m % 2 != 0) {
        report.verdict = Verdict::Obstructed;
        report.notes.push_back("factor " + g.to_string() +
                               " is fixed by t -> -t and has odd multiplicity " +
                               std::to_string(m));
      } else {
        F *= g.pow(m / 2);
      }
      continue;
    }
    std::size_t j = i + 1;
    while (j < factors.size() && factors[j].first != partner) ++j;
    used[i] = true;
    if (j == factors.size()) {
      report.verdict = Verdict::Obstructed;
      report.notes.push_back("factor " + g.to_string() + " has no partner " +
                             partner.to_string());
      continue;
    }
    used[j] = true;
    if (factors[j].second != m) {
      report.verdict = Verdict::Obstructed;
      report.notes.push_back("factor " + g.to_string() + " has multiplicity " +
                             std::to_string(m) + " but its partner " +
                             partner.to_string() + " has " +
                             std::to_string(factors[j].second));
      continue;
    }
    F *= (compare(g, partner) <= 0 ? g : partner).pow(m);
  }

  std::optional<FieldElement> d;
  if (report.verdict == Verdict::Consistent) {
    const int half = core.degree() / 2;
    const FieldElement target = half % 2 == 0 ? core.leading() : -core.leading();
    // Over fields containing i both signs can work; a rational root keeps f
    // monic up to sign, so prefer it.
    for (int sign : {1, -1}) {
      auto r = sqrt_in_field(sign == 1 ? target : -target, opts);
      if (r && (!d || (r->is_rational() && !d->is_rational()))) {
        d = r;
        report.pairing_sign = sign;
      }
    }
    if (!d) {
      report.verdict = Verdict::Obstructed;
      report.notes.push_back("leading coefficient " + core.leading().to_string() +
                             " is not a square up to sign in the field");
    }
  }

  if (report.verdict == Verdict::Consistent) {
    Polynomial f = F * canonical_root(*d);
    if (f * substitute_neg_t(f) != core * FieldElement(K, static_cast<long>(report.pairing_sign))) {
      throw ArithmeticError("internal error: assembled f does not reproduce P");
    }
    report.factor_f = std::move(f);
  }
  report.factorization = std::move(fac);
  return report;
}

const LiftResult* PeriodicityReport::passing() const {
  for (const auto& l : lifts) {
    if (l.report.verdict == Verdict::Consistent) return &l;
  }
  return nullptr;
}

PeriodicityReport free_two_periodicity_check(const TorsionValue& T, MeridianTrace declared,
                                             LiftSelection which, const FactorOptions& opts) {
  if (!T.exact_division) {
    throw ValidationError(
        "torsion is a proper fraction; the obstruction applies to polynomial torsion");
  }
  PeriodicityReport out;
  if (declared == MeridianTrace::NonParabolic) {
    out.notes.push_back("meridian is not parabolic; treating the torsion as the +2 lift");
  }
  const Polynomial& given = T.polynomial();
  if (given.is_zero()) throw ValidationError("torsion vanishes; nothing to factor");
  const Polynomial plus = declared == MeridianTrace::Minus ? substitute_neg_t(given) : given;

  auto run = [&](MeridianTrace lift, Polynomial P) {
    ObstructionReport r = check_pairing(P, opts);
    r.lift_tested = lift == MeridianTrace::Plus ? LiftSelection::Plus : LiftSelection::Minus;
    out.lifts.push_back({lift, std::move(P), std::move(r)});
  };
  if (which != LiftSelection::Plus) run(MeridianTrace::Minus, substitute_neg_t_squared(plus));
  if (which != LiftSelection::Minus) run(MeridianTrace::Plus, plus.inflate(2));

  int passing = 0;
  for (const auto& l : out.lifts) passing += l.report.verdict == Verdict::Consistent;
  out.verdict = passing > 0 ? Verdict::Consistent : Verdict::Obstructed;
  if (out.verdict == Verdict::Obstructed) {
    out.notes.push_back("no tested lift factors as f(t) f(-t): not freely 2-periodic");
  } else if (passing == 1 && out.lifts.size() == 2) {
    out.notes.push_back("only the " + to_string(out.passing()->lift) +
                        " lift factors; the other does not");
  }
  return out;
}

bool cross_check_quotient(const TorsionValue& T_K, const TorsionValue& T_Kbar) {
  if (!same_field(T_K.numerator.field(), T_Kbar.numerator.field())) {
    throw ArithmeticError("cross check needs both torsions over the same field");
  }
  if (!T_K.exact_division || !T_Kbar.exact_division) {
    throw ValidationError("cross check needs polynomial torsions");
  }
  const Polynomial& k = T_K.polynomial();
  const Polynomial& kbar = T_Kbar.polynomial();
  return equal_up_to_unit(substitute_neg_t_squared(k), kbar * substitute_neg_t(kbar));
}

}  // namespace pgate
