#pragma once

#include <pgate/factor.hpp>
#include <pgate/polynomial.hpp>
#include <pgate/sl2.hpp>
#include <pgate/torsion.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pgate {

enum class Verdict { Obstructed, Consistent };
enum class LiftSelection { Plus, Minus, Both };

std::string to_string(Verdict v);
std::string to_string(LiftSelection l);

struct ObstructionReport {
  Verdict verdict = Verdict::Obstructed;
  // Present iff Consistent: f(t) f(-t) = sign * P (after removing t^{2k}).
  std::optional<Polynomial> factor_f;
  int pairing_sign = 1;
  std::optional<Factorization> factorization;
  LiftSelection lift_tested = LiftSelection::Both;
  std::vector<std::string> notes;
};

// (-1)^deg(g) g(-t): the monic-preserving involution that pairs factors.
Polynomial sigma_hat(const Polynomial& g);

// Does the even polynomial P factor as f(t) f(-t) over its field, up to the
// units +-t^{2k}? Throws ArithmeticError for zero or non-even P.
ObstructionReport check_pairing(const Polynomial& P,
                                const FactorOptions& opts = {});

struct LiftResult {
  MeridianTrace lift;  // the SL_2 lift that would be the restriction
  Polynomial tested;   // the polynomial handed to check_pairing
  ObstructionReport report;
};

struct PeriodicityReport {
  Verdict verdict = Verdict::Obstructed;
  std::vector<LiftResult> lifts;
  std::vector<std::string> notes;

  const LiftResult* passing() const;
};

// T is the torsion of the lift with meridian trace `declared` (+2 is the
// hyperbolic torsion convention). The minus lift is tested on T_+(-t^2) and
// the plus lift on T_+(t^2); the verdict is Obstructed iff no tested lift
// factors.
PeriodicityReport free_two_periodicity_check(
    const TorsionValue& T, MeridianTrace declared = MeridianTrace::Plus,
    LiftSelection which = LiftSelection::Both, const FactorOptions& opts = {});

// unit_normalize(T_K(-t^2)) == unit_normalize(T_Kbar(t) T_Kbar(-t)).
bool cross_check_quotient(const TorsionValue& T_K, const TorsionValue& T_Kbar);

}  // namespace pgate
