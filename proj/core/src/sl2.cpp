#include <pgate/error.hpp>
#include <pgate/sl2.hpp>

namespace pgate {

Matrix2 Matrix2::identity(const FieldPtr& field) {
  return from_rationals(field, 1, 0, 0, 1);
}

Matrix2 Matrix2::from_rationals(const FieldPtr& field, long a, long b, long c, long d) {
  return {FieldElement(field, a), FieldElement(field, b), FieldElement(field, c),
          FieldElement(field, d)};
}

bool Matrix2::is_identity() const {
  return a.is_one() && b.is_zero() && c.is_zero() && d.is_one();
}

bool Matrix2::is_minus_identity() const {
  return (-a).is_one() && b.is_zero() && c.is_zero() && (-d).is_one();
}

Matrix2 Matrix2::adjugate() const { return {d, -b, -c, a}; }

Matrix2 Matrix2::inverse() const {
  const FieldElement det = determinant();
  if (det.is_zero()) throw ArithmeticError("singular 2x2 matrix has no inverse");
  if (det.is_one()) return adjugate();
  const FieldElement inv = det.inverse();
  return {d * inv, -b * inv, -c * inv, a * inv};
}

Matrix2 Matrix2::operator-() const { return {-a, -b, -c, -d}; }

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

bool operator==(const Matrix2& x, const Matrix2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

std::string Matrix2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " +
         d.to_string() + "]]";
}

Matrix2 evaluate_word(const Representation& rho, const Word& w) {
  Matrix2 m = Matrix2::identity(rho.field);
  for (const Letter& l : w.letters()) {
    const Matrix2& x = rho.images.at(l.generator);
    m = m * (l.exponent > 0 ? x : x.adjugate());
  }
  return m;
}

std::string ValidationReport::summary(const GroupPresentation& g) const {
  std::string out;
  auto line = [&](const std::string& s) {
    if (!out.empty()) out += "\n";
    out += s;
  };
  for (int i : bad_determinant) {
    line("generator " + g.generators.at(i) + " has determinant != 1");
  }
  for (int i : failed_relators) {
    line("relator " + std::to_string(i + 1) + " (" + g.word_to_string(g.relators.at(i)) +
         ") is not sent to the identity");
  }
  for (int i : lift_inconsistent) {
    line("relator " + std::to_string(i + 1) + " (" + g.word_to_string(g.relators.at(i)) +
         ") is sent to -I: the matrices lift a PSL_2 representation with the wrong signs");
  }
  for (const auto& w : warnings) line("warning: " + w);
  if (out.empty()) out = "ok";
  return out;
}

ValidationReport validate_representation(const Representation& rho) {
  const GroupPresentation& g = rho.group;
  if (static_cast<int>(rho.images.size()) != g.num_generators()) {
    throw ValidationError("representation has " + std::to_string(rho.images.size()) +
                          " images for " + std::to_string(g.num_generators()) +
                          " generators");
  }
  for (const Matrix2& m : rho.images) {
    for (const FieldElement* e : {&m.a, &m.b, &m.c, &m.d}) {
      if (!same_field(e->field(), rho.field)) {
        throw ValidationError("matrix entry outside the representation's field");
      }
    }
  }
  ValidationReport report;
  for (int i = 0; i < g.num_generators(); ++i) {
    if (!rho.images[i].determinant().is_one()) report.bad_determinant.push_back(i);
  }
  if (!report.bad_determinant.empty()) return report;
  for (int i = 0; i < g.num_relators(); ++i) {
    const Matrix2 m = evaluate_word(rho, g.relators[i]);
    if (m.is_identity()) continue;
    if (m.is_minus_identity()) {
      report.lift_inconsistent.push_back(i);
    } else {
      report.failed_relators.push_back(i);
    }
  }
  if (g.kind == GroupKind::QuotientKnot && g.longitude) {
    const FieldElement tr = evaluate_word(rho, *g.longitude).trace();
    if (tr != FieldElement(rho.field, -2L)) {
      report.warnings.push_back("trace of the longitude is " + tr.to_string() +
                                ", a geometric quotient-knot representation has -2");
    }
  }
  if (g.meridian && g.kind != GroupKind::Generic) {
    const Matrix2 m = evaluate_word(rho, *g.meridian);
    const FieldElement tr = m.trace();
    const bool parabolic = (tr == FieldElement(rho.field, 2L) && !m.is_identity()) ||
                           (tr == FieldElement(rho.field, -2L) && !m.is_minus_identity());
    if (!parabolic) {
      report.warnings.push_back("meridian image is not parabolic (trace " + tr.to_string() +
                                ")");
    }
  }
  return report;
}

void require_valid(const Representation& rho) {
  ValidationReport r = validate_representation(rho);
  if (!r.ok()) throw ValidationError(r.summary(rho.group));
}

std::string to_string(MeridianTrace s) {
  switch (s) {
    case MeridianTrace::Plus:
      return "+2";
    case MeridianTrace::Minus:
      return "-2";
    case MeridianTrace::NonParabolic:
      return "non-parabolic";
  }
  return "non-parabolic";
}

MeridianTrace meridian_trace_sign(const Representation& rho) {
  if (!rho.group.meridian) {
    throw ValidationError("presentation has no meridian word");
  }
  const Matrix2 m = evaluate_word(rho, *rho.group.meridian);
  const FieldElement tr = m.trace();
  if (tr == FieldElement(rho.field, 2L) && !m.is_identity()) return MeridianTrace::Plus;
  if (tr == FieldElement(rho.field, -2L) && !m.is_minus_identity()) {
    return MeridianTrace::Minus;
  }
  return MeridianTrace::NonParabolic;
}

FieldElement trace_relation_check(const Matrix2& A, const Matrix2& B) {
  return (A * B).trace() + (A * B.inverse()).trace() - A.trace() * B.trace();
}

Representation restrict_representation(const Representation& rho,
                                       const KernelPresentation& kernel) {
  Representation out{kernel.group, {}, rho.field};
  out.images.reserve(kernel.inclusion.size());
  for (const Word& w : kernel.inclusion) out.images.push_back(evaluate_word(rho, w));
  require_valid(out);
  return out;
}

}  // namespace pgate
