#include <pgate/abelianization.hpp>
#include <pgate/error.hpp>
#include <pgate/expression.hpp>
#include <pgate/schreier.hpp>
#include <pgate/torsion.hpp>
#include <pgate_cli/commands.hpp>

#include <chrono>
#include <sstream>

#ifndef PGATE_VERSION
#define PGATE_VERSION "0.0.0"
#endif

namespace pgate::cli {
namespace {

using nlohmann::ordered_json;

std::string field_label(const InputDocument& doc) {
  if (doc.field->is_rationals()) return "Q";
  return "Q(" + doc.field_variable + ")/(" + doc.field->min_poly_string() + ")";
}

ordered_json field_json(const InputDocument& doc) {
  if (doc.field->is_rationals()) return ordered_json{{"variable", nullptr}, {"min_poly", nullptr}};
  return ordered_json{{"variable", doc.field_variable},
                      {"min_poly", doc.field->min_poly_string()}};
}

ordered_json torsion_json(const TorsionValue& T, const GroupPresentation& g) {
  ordered_json j;
  j["value"] = T.to_string();
  j["exact_division"] = T.exact_division;
  j["numerator"] = T.numerator.to_string();
  j["denominator"] = T.denominator.to_string();
  if (T.deleted_column >= 0) j["deleted_column"] = g.generators.at(T.deleted_column);
  if (T.normalized) {
    j["normalized"] = {{"poly", T.normalized->poly.to_string()},
                       {"shift", T.normalized->shift},
                       {"sign", T.normalized->sign}};
  }
  return j;
}

ordered_json alpha_json(const GroupPresentation& g, const Abelianization& a) {
  ordered_json values = ordered_json::object();
  for (int i = 0; i < g.num_generators(); ++i) values[g.generators[i]] = a.values.at(i);
  return values;
}

struct Context {
  const InputDocument& doc;
  const Options& options;
  Report report;
  std::ostringstream text;
  bool expected_ok = true;
  bool expected_any = false;

  void expect(const char* what, const std::optional<std::string>& want, const std::string& got,
              bool match) {
    if (!want) return;
    expected_any = true;
    expected_ok = expected_ok && match;
    report.json["expected"][what] = {{"expected", *want}, {"actual", got}, {"match", match}};
    if (!match) text << "  expected " << what << " " << *want << ", got " << got << "\n";
  }

  Polynomial parse_expected(const std::string& what, const std::string& s) const {
    try {
      return parse_polynomial(doc.field, s);
    } catch (const ParseError& e) {
      throw ParseError("in 'expected." + what + "': " + e.detail(), e.line(), e.column());
    }
  }
};

void require_group_and_rep(const InputDocument& doc, const char* command) {
  if (!doc.group || !doc.representation) {
    throw ValidationError(std::string(command) + " needs 'group' and 'representation'");
  }
}

struct TorsionRun {
  Abelianization alpha;
  TorsionValue value;
  std::vector<std::string> warnings;
  std::optional<MeridianTrace> meridian;
  bool columns_agree = true;
  std::vector<int> columns;
};

TorsionRun compute_torsion(const InputDocument& doc) {
  const Representation& rho = *doc.representation;
  const GroupPresentation& g = *doc.group;
  ValidationReport v = validate_representation(rho);
  if (!v.ok()) throw ValidationError(v.summary(g));
  Abelianization alpha = abelianize(g);
  TorsionValue T = twisted_alexander(g, alpha, rho, doc.delete_column.value_or(-1));
  TorsionRun run{alpha, T, v.warnings, std::nullopt, true, {}};
  if (g.meridian) run.meridian = meridian_trace_sign(rho);
  run.columns = admissible_columns(g, alpha, rho);
  for (int c : run.columns) {
    if (c == T.deleted_column) continue;
    if (!equal_up_to_unit(twisted_alexander(g, alpha, rho, c), T)) run.columns_agree = false;
  }
  return run;
}

void emit_torsion(Context& ctx, const TorsionRun& run) {
  const GroupPresentation& g = *ctx.doc.group;
  ctx.report.json["torsion"] = torsion_json(run.value, g);
  ordered_json cols = ordered_json::array();
  for (int c : run.columns) cols.push_back(g.generators[c]);
  ctx.report.json["admissible_columns"] = cols;
  ctx.report.json["columns_agree"] = run.columns_agree;
  if (run.meridian) ctx.report.json["meridian_trace"] = to_string(*run.meridian);
  for (const auto& w : run.warnings) ctx.report.json["warnings"].push_back(w);

  ctx.text << "  torsion    " << run.value.to_string() << "\n";
  ctx.text << "  column     " << g.generators[run.value.deleted_column]
           << (run.columns_agree ? " (all admissible columns agree)" : " (COLUMNS DISAGREE)")
           << "\n";
  if (run.meridian) ctx.text << "  meridian   trace " << to_string(*run.meridian) << "\n";
  for (const auto& w : run.warnings) ctx.text << "  warning    " << w << "\n";

  if (ctx.doc.expected.torsion) {
    bool match;
    if (run.value.exact_division) {
      match = equal_up_to_unit(ctx.parse_expected("torsion", *ctx.doc.expected.torsion),
                               run.value.polynomial());
    } else {
      match = *ctx.doc.expected.torsion == run.value.to_string();
    }
    ctx.expect("torsion", ctx.doc.expected.torsion, run.value.to_string(), match);
  }
}

void cmd_torsion(Context& ctx) {
  require_group_and_rep(ctx.doc, "torsion");
  TorsionRun run = compute_torsion(ctx.doc);
  emit_torsion(ctx, run);
  if (!run.columns_agree) ctx.report.exit_code = kFailure;
}

void cmd_obstruct(Context& ctx) {
  const InputDocument& doc = ctx.doc;
  TorsionValue T{Polynomial(doc.field), Polynomial(doc.field), true, std::nullopt, -1};
  MeridianTrace declared = doc.meridian_trace.value_or(MeridianTrace::Plus);
  if (doc.polynomial) {
    if (doc.polynomial->is_zero()) throw ValidationError("torsion polynomial is zero");
    T.numerator = *doc.polynomial;
    T.denominator = Polynomial::constant(FieldElement(doc.field, 1L));
    T.normalized = unit_normalize(*doc.polynomial);
    ctx.report.json["torsion"] = {{"value", T.to_string()}};
    ctx.text << "  torsion    " << T.to_string() << "\n";
  } else {
    require_group_and_rep(doc, "obstruct");
    TorsionRun run = compute_torsion(doc);
    emit_torsion(ctx, run);
    if (run.meridian) declared = *run.meridian;
    T = run.value;
  }
  ctx.report.json["declared_lift"] = to_string(declared);

  PeriodicityReport pr = free_two_periodicity_check(T, declared, ctx.options.lift,
                                                    ctx.options.factor);
  ordered_json lifts = ordered_json::array();
  for (const auto& l : pr.lifts) {
    ordered_json j;
    j["lift"] = to_string(l.lift);
    j["tested"] = l.tested.to_string();
    j["verdict"] = to_string(l.report.verdict);
    if (l.report.factor_f) {
      j["f"] = l.report.factor_f->to_string();
      j["pairing_sign"] = l.report.pairing_sign;
    }
    if (l.report.factorization) {
      j["factor_count"] = l.report.factorization->factors.size();
      j["factorization"] = l.report.factorization->to_string();
    }
    j["notes"] = l.report.notes;
    lifts.push_back(std::move(j));

    ctx.text << "  lift " << to_string(l.lift) << "    " << to_string(l.report.verdict);
    if (l.report.factor_f) ctx.text << "  f = " << l.report.factor_f->to_string();
    ctx.text << "\n";
    for (const auto& n : l.report.notes) ctx.text << "             " << n << "\n";
  }
  ctx.report.json["lifts"] = std::move(lifts);
  ctx.report.json["verdict"] = to_string(pr.verdict);
  const LiftResult* pass = pr.passing();
  ctx.report.json["factor_f"] = pass ? ordered_json(pass->report.factor_f->to_string())
                                     : ordered_json(nullptr);
  ctx.report.json["notes"] = pr.notes;
  for (const auto& n : pr.notes) ctx.text << "  note       " << n << "\n";

  ctx.expect("verdict", doc.expected.verdict, to_string(pr.verdict),
             doc.expected.verdict == to_string(pr.verdict));
  if (doc.expected.f) {
    bool match = false;
    std::string got = "none";
    if (pass) {
      const Polynomial want = ctx.parse_expected("f", *doc.expected.f);
      const Polynomial& f = *pass->report.factor_f;
      got = f.to_string();
      match = equal_up_to_unit(want, f) || equal_up_to_unit(substitute_neg_t(want), f);
    }
    ctx.expect("f", doc.expected.f, got, match);
  }
  ctx.report.exit_code = pr.verdict == Verdict::Consistent ? kSuccess : kObstructed;
  ctx.text.str("  verdict    " + to_string(pr.verdict) + "\n" + ctx.text.str());
}

void cmd_factor(Context& ctx) {
  if (!ctx.doc.polynomial) throw ValidationError("factor needs 'polynomial'");
  const Polynomial& p = *ctx.doc.polynomial;
  if (p.is_zero()) throw ValidationError("cannot factor the zero polynomial");
  Factorization f = factor_over_nf(p, ctx.options.factor);
  ordered_json factors = ordered_json::array();
  for (const auto& [g, m] : f.factors) {
    factors.push_back({{"factor", g.to_string()}, {"degree", g.degree()}, {"multiplicity", m}});
  }
  const bool irreducible = p.degree() >= 1 && f.factors.size() == 1 && f.factors[0].second == 1;
  ctx.report.json["unit"] = f.unit.to_string();
  ctx.report.json["factors"] = std::move(factors);
  ctx.report.json["irreducible"] = irreducible;
  ctx.report.json["factorization"] = f.to_string();
  ctx.text << "  input      " << p.to_string() << "\n";
  ctx.text << "  factors    " << f.to_string() << "\n";
  ctx.text << "  irreducible " << (irreducible ? "yes" : "no") << "\n";
  ctx.expect("factorization", ctx.doc.expected.factorization, f.to_string(),
             ctx.doc.expected.factorization == f.to_string());
}

void cmd_cover(Context& ctx) {
  const InputDocument& doc = ctx.doc;
  if (!doc.group) throw ValidationError("cover needs 'group'");
  const GroupPresentation& g = *doc.group;
  if (g.kind != GroupKind::QuotientKnot) {
    throw ValidationError("cover needs a group of kind quotient-knot, got " + to_string(g.kind));
  }
  Abelianization alpha = abelianize(g);
  KernelPresentation k = reidemeister_schreier_index2(g, alpha.epsilon);
  Abelianization kalpha = restrict_abelianization(alpha, k);

  ordered_json parent;
  parent["presentation"] = g.to_string();
  parent["h1"] = alpha.h1.to_string();
  parent["alpha"] = alpha_json(g, alpha);
  parent["transversal"] = g.generators[k.transversal];
  ordered_json kernel;
  kernel["presentation"] = k.group.to_string();
  ordered_json incl = ordered_json::object();
  for (std::size_t i = 0; i < k.inclusion.size(); ++i) {
    incl[k.group.generators[i]] = g.word_to_string(k.inclusion[i]);
  }
  kernel["inclusion"] = std::move(incl);
  kernel["h1"] = kalpha.h1.to_string();
  kernel["alpha"] = alpha_json(k.group, kalpha);

  ordered_json table = ordered_json::array();
  for (std::array<long, 2> v : {std::array<long, 2>{1, 0}, std::array<long, 2>{0, 1}}) {
    auto w = peripheral_cover_map(v);
    table.push_back({{"from", v}, {"to", w}});
  }
  ctx.report.json["quotient"] = std::move(parent);
  ctx.report.json["kernel"] = std::move(kernel);
  ctx.report.json["peripheral_map"] = {{"matrix", PeripheralChangeOfBasis::matrix},
                                       {"determinant", PeripheralChangeOfBasis::determinant()},
                                       {"columns", std::move(table)}};

  ctx.text << "  quotient   " << g.to_string() << "\n";
  ctx.text << "             H_1 = " << alpha.h1.to_string() << ", x0 = "
           << g.generators[k.transversal] << "\n";
  ctx.text << "  kernel     " << k.group.to_string() << "\n";
  for (std::size_t i = 0; i < k.inclusion.size(); ++i) {
    ctx.text << "             " << k.group.generators[i] << " = "
             << g.word_to_string(k.inclusion[i]) << "\n";
  }
  ctx.text << "             H_1 = " << kalpha.h1.to_string() << "\n";
  ctx.text << "  (m, l) -> (alpha, lbar): (1,0) -> (2,1), (0,1) -> (0,1), det "
           << PeripheralChangeOfBasis::determinant() << "\n";

  if (!doc.representation) return;
  const Representation& rho = *doc.representation;
  ValidationReport v = validate_representation(rho);
  if (!v.ok()) throw ValidationError(v.summary(g));
  TorsionValue T_bar = twisted_alexander(g, alpha, rho, doc.delete_column.value_or(-1));
  Representation res = restrict_representation(rho, k);
  TorsionValue T_res = twisted_alexander(k.group, kalpha, res);
  ordered_json tj;
  tj["quotient"] = torsion_json(T_bar, g);
  tj["restriction"] = torsion_json(T_res, k.group);
  if (k.group.meridian) {
    tj["restriction_meridian_trace"] = to_string(meridian_trace_sign(res));
  }
  bool holds = false;
  if (T_bar.exact_division && T_res.exact_division) {
    const TorsionValue T_K = torsion_of_other_lift(T_res);
    holds = cross_check_quotient(T_K, T_bar);
    tj["knot"] = T_K.to_string();
  }
  tj["identity_holds"] = holds;
  ctx.report.json["torsion"] = std::move(tj);
  ctx.text << "  T_Kbar     " << T_bar.to_string() << "\n";
  ctx.text << "  T_res      " << T_res.to_string() << "\n";
  ctx.text << "  T_K(-t^2) = T_Kbar(t) T_Kbar(-t): " << (holds ? "holds" : "FAILS") << "\n";
  if (!holds) ctx.report.exit_code = kFailure;
}

Report error_report(Command command, const std::string& name, int code, const std::string& kind,
                    const std::string& message, std::size_t line = 0, std::size_t column = 0) {
  Report r;
  r.exit_code = code;
  r.json["tool"] = "periodicity-gate";
  r.json["version"] = version();
  r.json["command"] = to_string(command);
  r.json["input"] = name;
  r.json["error"] = {{"kind", kind}, {"message", message}};
  if (line > 0) r.json["error"]["line"] = line;
  if (column > 0) r.json["error"]["column"] = column;
  r.text = (name.empty() ? std::string("<stdin>") : name) + ": " + kind + " error: " + message +
           "\n";
  return r;
}

template <class F>
Report guarded(Command command, const std::string& name, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return error_report(command, name, kParseError, "parse", e.what(), e.line(), e.column());
  } catch (const ValidationError& e) {
    return error_report(command, name, kValidationError, "validation", e.what());
  } catch (const ArithmeticError& e) {
    return error_report(command, name, kValidationError, "validation", e.what());
  } catch (const std::exception& e) {
    return error_report(command, name, kFailure, "internal", e.what());
  }
}

}  // namespace

const char* version() { return PGATE_VERSION; }

Command parse_command(const std::string& name) {
  if (name == "torsion") return Command::Torsion;
  if (name == "obstruct") return Command::Obstruct;
  if (name == "factor") return Command::Factor;
  if (name == "cover") return Command::Cover;
  throw ParseError("unknown command '" + name + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Torsion:
      return "torsion";
    case Command::Obstruct:
      return "obstruct";
    case Command::Factor:
      return "factor";
    case Command::Cover:
      return "cover";
  }
  return "?";
}

Report run(Command command, const InputDocument& doc, const Options& options) {
  return guarded(command, doc.name, [&] {
    const auto start = std::chrono::steady_clock::now();
    Context ctx{doc, options, {}, {}};
    ctx.report.json["tool"] = "periodicity-gate";
    ctx.report.json["version"] = version();
    ctx.report.json["command"] = to_string(command);
    ctx.report.json["input"] = doc.name;
    ctx.report.json["field"] = field_json(doc);
    ctx.report.json["seed"] = options.factor.seed;
    switch (command) {
      case Command::Torsion:
        cmd_torsion(ctx);
        break;
      case Command::Obstruct:
        cmd_obstruct(ctx);
        break;
      case Command::Factor:
        cmd_factor(ctx);
        break;
      case Command::Cover:
        cmd_cover(ctx);
        break;
    }
    if (ctx.expected_any) ctx.report.json["expected_match"] = ctx.expected_ok;
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    ctx.report.json["timings_ms"] = {{"compute", ms}};
    ctx.report.json["exit_code"] = ctx.report.exit_code;
    ctx.report.text = (doc.name.empty() ? std::string("<stdin>") : doc.name) + " [" +
                      to_string(command) + "] over " + field_label(doc) + "\n" + ctx.text.str();
    return std::move(ctx.report);
  });
}

Report run(Command command, std::string_view json_text, const Options& options,
           const std::string& name) {
  return guarded(command, name, [&] {
    InputDocument doc = parse_input(json_text, name);
    return run(command, doc, options);
  });
}

}  // namespace pgate::cli
