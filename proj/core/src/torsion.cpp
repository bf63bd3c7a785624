#include <pgate/detail/bareiss.hpp>
#include <pgate/error.hpp>
#include <pgate/torsion.hpp>

#include <limits>
#include <map>

namespace pgate {
namespace {

struct PolyOps {
  FieldPtr field;
  Polynomial one() const { return Polynomial::constant(FieldElement(field, 1L)); }
  Polynomial zero() const { return Polynomial(field); }
  bool is_zero(const Polynomial& x) const { return x.is_zero(); }
  Polynomial mul(const Polynomial& x, const Polynomial& y) const { return x * y; }
  Polynomial sub(const Polynomial& x, const Polynomial& y) const { return x - y; }
  Polynomial neg(const Polynomial& x) const { return -x; }
  Polynomial exact_div(const Polynomial& x, const Polynomial& y) const {
    return exact_quotient(x, y);
  }
};

using LaurentMatrix = std::map<long, Matrix2>;

void check_deficiency(const GroupPresentation& g) {
  if (g.num_relators() != g.num_generators() - 1) {
    throw ValidationError(
        "twisted Alexander invariant needs a deficiency-one presentation: " +
        std::to_string(g.num_generators()) + " generators need " +
        std::to_string(g.num_generators() - 1) + " relators, got " +
        std::to_string(g.num_relators()) +
        " (drop a redundant Wirtinger relator or add generators)");
  }
}

TorsionValue make_value(Polynomial num, Polynomial den, int column) {
  TorsionValue v{std::move(num), std::move(den), false, std::nullopt, column};
  if (v.numerator.is_zero()) {
    v.exact_division = true;
    return v;
  }
  auto [q, r] = divrem(v.numerator, v.denominator);
  if (r.is_zero()) {
    v.exact_division = true;
    v.normalized = unit_normalize(q);
    return v;
  }
  Polynomial g = gcd(v.numerator, v.denominator);
  v.numerator = exact_quotient(v.numerator, g);
  v.denominator = exact_quotient(v.denominator, g);
  const FieldElement lead_inv = v.denominator.leading().inverse();
  v.numerator *= lead_inv;
  v.denominator *= lead_inv;
  return v;
}

}  // namespace

std::vector<std::vector<Polynomial>> BlockMatrix::flatten(int skip) const {
  std::vector<std::vector<Polynomial>> out;
  out.reserve(2 * rows);
  for (int r = 0; r < rows; ++r) {
    for (int i = 0; i < 2; ++i) {
      std::vector<Polynomial> row;
      for (int c = 0; c < cols; ++c) {
        if (c == skip) continue;
        row.push_back(blocks[r][c][2 * i]);
        row.push_back(blocks[r][c][2 * i + 1]);
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

BlockMatrix wada_block_matrix(const GroupPresentation& g, const Abelianization& alpha,
                              const Representation& rho) {
  check_deficiency(g);
  const FieldPtr& K = rho.field;
  const int rows = g.num_relators(), cols = g.num_generators();

  std::vector<std::vector<LaurentMatrix>> laurent(rows, std::vector<LaurentMatrix>(cols));
  long lowest = std::numeric_limits<long>::max();
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      for (const auto& [word, coeff] : fox_derivative(g.relators[i], j)) {
        const long k = alpha.evaluate(word);
        Matrix2 m = evaluate_word(rho, word);
        const FieldElement c(K, coeff);
        m = {m.a * c, m.b * c, m.c * c, m.d * c};
        auto [it, inserted] = laurent[i][j].try_emplace(k, m);
        if (!inserted) it->second = it->second + m;
      }
    }
  }
  for (const auto& row : laurent) {
    for (const auto& entry : row) {
      for (const auto& [k, m] : entry) {
        if (!(m.a.is_zero() && m.b.is_zero() && m.c.is_zero() && m.d.is_zero())) {
          lowest = std::min(lowest, k);
        }
      }
    }
  }

  BlockMatrix out;
  out.rows = rows;
  out.cols = cols;
  out.shift = lowest < 0 ? static_cast<int>(-lowest) : 0;
  out.blocks.assign(rows, std::vector<std::vector<Polynomial>>(
                              cols, std::vector<Polynomial>(4, Polynomial(K))));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      for (const auto& [k, m] : laurent[i][j]) {
        const int deg = static_cast<int>(k + out.shift);
        const FieldElement* entries[4] = {&m.a, &m.b, &m.c, &m.d};
        for (int e = 0; e < 4; ++e) {
          if (!entries[e]->is_zero()) {
            out.blocks[i][j][e] += Polynomial::monomial(*entries[e], deg);
          }
        }
      }
    }
  }
  return out;
}

Polynomial block_determinant(std::vector<std::vector<Polynomial>> m, const FieldPtr& field) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw ArithmeticError("determinant of a non-square matrix");
  }
  return detail::bareiss_determinant(std::move(m), PolyOps{field});
}

Polynomial denominator_for(const Matrix2& image, long alpha_value) {
  const FieldPtr& K = image.field();
  const FieldElement one(K, 1L);
  const int k = static_cast<int>(alpha_value < 0 ? -alpha_value : alpha_value);
  // det(t^k M - I) = det(M) t^2k - tr(M) t^k + 1; for negative weights
  // multiply through by t^2|k| to get det(M - t^|k| I).
  if (alpha_value >= 0) {
    return Polynomial::monomial(image.determinant(), 2 * k) -
           Polynomial::monomial(image.trace(), k) + Polynomial::constant(one);
  }
  return Polynomial::monomial(one, 2 * k) - Polynomial::monomial(image.trace(), k) +
         Polynomial::constant(image.determinant());
}

const Polynomial& TorsionValue::polynomial() const {
  if (!exact_division) {
    throw ArithmeticError("torsion is a proper fraction, not a polynomial");
  }
  return normalized ? normalized->poly : numerator;
}

std::string TorsionValue::to_string(const std::string& var) const {
  if (exact_division) return polynomial().to_string(var);
  return "(" + numerator.to_string(var) + ") / (" + denominator.to_string(var) + ")";
}

std::vector<int> admissible_columns(const GroupPresentation& g, const Abelianization& alpha,
                                    const Representation& rho) {
  std::vector<int> out;
  for (int j = 0; j < g.num_generators(); ++j) {
    if (!denominator_for(rho.images.at(j), alpha.values.at(j)).is_zero()) out.push_back(j);
  }
  return out;
}

TorsionValue twisted_alexander(const GroupPresentation& g, const Abelianization& alpha,
                               const Representation& rho, int delete_column) {
  check_deficiency(g);
  if (delete_column >= g.num_generators()) {
    throw ValidationError("column " + std::to_string(delete_column) + " out of range");
  }
  if (delete_column < 0) {
    int best_degree = std::numeric_limits<int>::max();
    for (int j : admissible_columns(g, alpha, rho)) {
      const int d = denominator_for(rho.images[j], alpha.values[j]).degree();
      if (d < best_degree) {
        best_degree = d;
        delete_column = j;
      }
    }
    if (delete_column < 0) {
      throw ValidationError("no admissible column: det Phi(g - 1) vanishes for every generator");
    }
  }
  Polynomial den = denominator_for(rho.images[delete_column], alpha.values[delete_column]);
  if (den.is_zero()) {
    throw ValidationError("column " + g.generators[delete_column] +
                          " is not admissible: det Phi(g - 1) = 0");
  }
  BlockMatrix M = wada_block_matrix(g, alpha, rho);
  Polynomial num = block_determinant(M.flatten(delete_column), rho.field);
  return make_value(std::move(num), std::move(den), delete_column);
}

bool equal_up_to_unit(const TorsionValue& a, const TorsionValue& b) {
  return equal_up_to_unit(a.numerator * b.denominator, b.numerator * a.denominator);
}

TorsionValue torsion_of_other_lift(const TorsionValue& T) {
  return make_value(substitute_neg_t(T.exact_division ? T.polynomial() : T.numerator),
                    T.exact_division ? Polynomial::constant(FieldElement(T.numerator.field(), 1L))
                                     : substitute_neg_t(T.denominator),
                    T.deleted_column);
}

}  // namespace pgate
