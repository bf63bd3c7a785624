#include <pgate/abelianization.hpp>
#include <pgate/error.hpp>

#include <numeric>
#include <sstream>

namespace pgate {

SmithForm smith_normal_form(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  SmithForm out;
  out.right.assign(cols, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) out.right[i][i] = 1;
  auto& V = out.right;

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : V) std::swap(row[i], row[j]);
  };
  // column j -= q * column i
  auto col_axpy = [&](std::size_t j, std::size_t i, const Integer& q) {
    for (auto& row : a) row[j] -= q * row[i];
    for (auto& row : V) row[j] -= q * row[i];
  };

  const std::size_t n = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;
      std::swap(a[t], a[pr]);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_axpy(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] == 0) break;
  }
  out.rank = static_cast<int>(t);
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = abs(a[i][i]);
  return out;
}

namespace {

std::vector<std::vector<Integer>> relation_matrix(const GroupPresentation& g) {
  std::vector<std::vector<Integer>> m;
  for (const Word& r : g.relators) {
    std::vector<Integer> row(g.num_generators());
    for (int j = 0; j < g.num_generators(); ++j) row[j] = r.exponent_sum(j);
    m.push_back(std::move(row));
  }
  return m;
}

Homology homology_from(const SmithForm& snf, int generators) {
  Homology h;
  h.free_rank = generators - snf.rank;
  for (int i = 0; i < snf.rank; ++i) {
    if (snf.diagonal[i] > 1) h.torsion.push_back(snf.diagonal[i]);
  }
  return h;
}

}  // namespace

std::string Homology::to_string() const {
  std::ostringstream out;
  if (free_rank == 0 && torsion.empty()) return "0";
  if (free_rank == 1) out << "Z";
  if (free_rank > 1) out << "Z^" << free_rank;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (free_rank > 0 || i > 0) out << " + ";
    out << "Z/" << torsion[i].get_str();
  }
  return out.str();
}

Homology homology(const GroupPresentation& g) {
  if (g.relators.empty()) return Homology{g.num_generators(), {}};
  return homology_from(smith_normal_form(relation_matrix(g)), g.num_generators());
}

long Abelianization::evaluate(const Word& w) const {
  long s = 0;
  for (const Letter& l : w.letters()) s += values.at(l.generator) * l.exponent;
  return s;
}

int Abelianization::parity(const Word& w) const {
  return static_cast<int>(((evaluate(w) % 2) + 2) % 2);
}

Abelianization abelianize(const GroupPresentation& g) {
  Abelianization out;
  const int n = g.num_generators();
  std::vector<Integer> column;
  if (g.relators.empty()) {
    out.h1 = Homology{n, {}};
    if (n == 1) column = {Integer(1)};
  } else {
    SmithForm snf = smith_normal_form(relation_matrix(g));
    out.h1 = homology_from(snf, n);
    if (out.h1.infinite_cyclic()) {
      for (int i = 0; i < n; ++i) column.push_back(snf.right[i][snf.rank]);
    }
  }
  if (!out.h1.infinite_cyclic()) {
    if (g.kind == GroupKind::Generic) {
      throw ValidationError("H_1 = " + out.h1.to_string() +
                            ", no surjection onto Z to twist by");
    }
    throw ValidationError("H_1 = " + out.h1.to_string() + " for a " + to_string(g.kind) +
                          " group; a knot complement in S^3 or RP^3 has H_1 = Z");
  }

  for (const auto& c : column) {
    if (!c.fits_slong_p()) throw ValidationError("abelianization value out of range");
    out.values.push_back(c.get_si());
  }
  long sign = 0;
  if (g.meridian) {
    const long m = out.evaluate(*g.meridian);
    sign = m > 0 ? 1 : (m < 0 ? -1 : 0);
    if (g.kind != GroupKind::Generic && m != 1 && m != -1) {
      throw ValidationError("meridian " + g.word_to_string(*g.meridian) + " maps to " +
                            std::to_string(m) + " in H_1 = Z, expected a generator");
    }
  }
  if (sign == 0) {
    for (long v : out.values) {
      if (v != 0) {
        sign = v > 0 ? 1 : -1;
        break;
      }
    }
  }
  for (long& v : out.values) v *= sign;
  for (long v : out.values) out.epsilon.push_back(static_cast<int>(((v % 2) + 2) % 2));
  return out;
}

std::array<long, 2> peripheral_cover_map(std::array<long, 2> c) {
  const auto& m = PeripheralChangeOfBasis::matrix;
  return {m[0][0] * c[0] + m[0][1] * c[1], m[1][0] * c[0] + m[1][1] * c[1]};
}

}  // namespace pgate
