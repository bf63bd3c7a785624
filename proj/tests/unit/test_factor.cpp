#include "support.hpp"

#include <pgate/error.hpp>

#include <gtest/gtest.h>

using namespace pgate;
using namespace pgate::testing;

namespace {

std::vector<std::pair<Polynomial, int>> sorted(std::vector<std::pair<Polynomial, int>> v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  return v;
}

Polynomial lift(const FieldPtr& K, const Polynomial& q) {
  std::vector<Rational> c;
  for (const auto& e : q.coeffs()) c.push_back(e.rational_part());
  return Polynomial::from_rationals(K, c);
}

// Quadratic t^2 - c with c known not to be a square in the field.
struct KnownIrreducible {
  std::string field;
  std::string quadratic;
};

const std::vector<KnownIrreducible> kQuadratics = {
    {"z", "t^2 - 2"},           {"z^2 + 1", "t^2 - 3"},  {"z^2 - 3", "t^2 + 1"},
    {"z^3 + z - 1", "t^2 - 2"}, {"z^4 + 1", "t^2 - 3"},
};

void expect_valid(const Polynomial& p, const Factorization& f) {
  EXPECT_EQ(f.expand(), p) << p.to_string();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    EXPECT_EQ(f.factors[i].first, f.factors[i].first.monic());
    EXPECT_GE(f.factors[i].first.degree(), 1);
    EXPECT_GE(f.factors[i].second, 1);
    for (std::size_t j = 0; j < i; ++j) EXPECT_NE(f.factors[i].first, f.factors[j].first);
  }
}

}  // namespace

TEST(FactorOverQ, SmallExamples) {
  auto f = factor_over_q(qpoly("t^4 - 1"));
  EXPECT_EQ(f.to_string(), "(t - 1) * (t + 1) * (t^2 + 1)");
  f = factor_over_q(qpoly("-2*t^3 + 2*t"));
  EXPECT_EQ(f.to_string(), "-2 * (t - 1) * (t) * (t + 1)");
  f = factor_over_q(qpoly("(t^2 - t + 1)^2*(t - 1)^3"));
  EXPECT_EQ(f.to_string(), "(t - 1)^3 * (t^2 - t + 1)^2");
  f = factor_over_q(qpoly("7/3"));
  EXPECT_EQ(f.to_string(), "7/3");
  EXPECT_THROW(factor_over_q(Polynomial(NumberField::rationals())), ArithmeticError);
  EXPECT_THROW(factor_over_q(poly(field("z^2 + 1"), "t")), ArithmeticError);
}

TEST(FactorOverQ, T4Plus1HasNoIntegerFactor) {
  const Polynomial p = qpoly("t^4 + 1");
  EXPECT_TRUE(is_irreducible(p));
  // Gauss: any factor is integral and monic, so roots are +-1 and a quadratic
  // t^2 + a t + b has b = +-1 and |a| bounded by the coefficients.
  const FieldPtr Q = NumberField::rationals();
  for (long r : {-1L, 1L}) EXPECT_FALSE(p.evaluate(FieldElement(Q, r)).is_zero());
  for (long a = -4; a <= 4; ++a) {
    for (long b : {-1L, 1L}) {
      const Polynomial q = Polynomial::from_rationals(Q, {Rational(b), Rational(a), Rational(1)});
      EXPECT_FALSE(divrem(p, q).second.is_zero()) << q.to_string();
    }
  }
}

TEST(FactorOverQ, SwinnertonDyerStyleRecombination) {
  // (t^2-2)(t^2-3) style minimal polynomial of sqrt2 + sqrt3 splits into
  // many factors modulo every prime, which exercises recombination.
  const Polynomial p = qpoly("t^4 - 10*t^2 + 1");
  EXPECT_TRUE(is_irreducible(p));
  const Polynomial q = qpoly("t^8 - 40*t^6 + 352*t^4 - 960*t^2 + 576");
  EXPECT_TRUE(is_irreducible(q));
  expect_valid(p * q, factor_over_q(p * q));
  EXPECT_EQ(factor_over_q(p * q).factors.size(), 2u);
}

TEST(FactorOverNf, SplittingOfT4Plus1) {
  auto K = field("z^2 + 1");
  auto f = factor_over_nf(poly(K, "t^4 + 1"));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first * f.factors[1].first, poly(K, "t^4 + 1"));
  EXPECT_EQ(sorted(f.factors),
            sorted({{poly(K, "t^2 - z"), 1}, {poly(K, "t^2 + z"), 1}}));

  auto R2 = field("z^2 - 2");
  f = factor_over_nf(poly(R2, "t^4 + 1"));
  EXPECT_EQ(sorted(f.factors),
            sorted({{poly(R2, "t^2 + z*t + 1"), 1}, {poly(R2, "t^2 - z*t + 1"), 1}}));

  auto C8 = field("z^4 + 1");
  f = factor_over_nf(poly(C8, "t^4 + 1"));
  EXPECT_EQ(f.factors.size(), 4u);
  for (const auto& [g, m] : f.factors) EXPECT_EQ(g.degree(), 1);
  expect_valid(poly(C8, "t^4 + 1"), f);
}

TEST(FactorOverNf, ValuationAndMultiplicity) {
  auto K = field("z^3 + z - 1");
  const Polynomial p = poly(K, "z*t^3*(t - z)^2*(t^2 - 2)");
  auto f = factor_over_nf(p);
  expect_valid(p, f);
  EXPECT_EQ(f.unit, parse_field_element(K, "z"));
  EXPECT_EQ(sorted(f.factors),
            sorted({{poly(K, "t"), 3}, {poly(K, "t - z"), 2}, {poly(K, "t^2 - 2"), 1}}));
}

TEST(FactorOverNf, KnownIrreducibleProducts) {
  Random r(31);
  for (const auto& [fs, quad] : kQuadratics) {
    auto K = field(fs);
    const Polynomial q = poly(K, quad);
    EXPECT_TRUE(is_irreducible(q)) << fs;
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::pair<Polynomial, int>> expected{{q, static_cast<int>(r.integer(1, 2))}};
      const FieldElement c1 = r.element(K, 4), c2 = r.element(K, 4);
      const Polynomial l1 = Polynomial::variable(K) - Polynomial::constant(c1);
      const Polynomial l2 = Polynomial::variable(K) - Polynomial::constant(c2);
      if (l1 == l2) continue;
      expected.push_back({l1, static_cast<int>(r.integer(1, 3))});
      expected.push_back({l2, 1});
      Polynomial p = Polynomial::constant(r.nonzero(K));
      for (const auto& [g, m] : expected) p *= g.pow(m);
      auto f = factor_over_nf(p);
      expect_valid(p, f);
      EXPECT_EQ(sorted(f.factors), sorted(expected)) << fs << ": " << p.to_string();
    }
  }
}

TEST(FactorOverNf, RefinesRationalFactorizationAndNormsArePowers) {
  Random r(32);
  const FieldPtr Q = NumberField::rationals();
  for (const auto& K : small_fields()) {
    if (K->is_rationals()) continue;
    for (int trial = 0; trial < 5; ++trial) {
      const Polynomial pq = r.polynomial(Q, static_cast<int>(r.integer(2, 6)), 4);
      const auto over_q = factor_over_q(pq);
      const auto over_k = factor_over_nf(lift(K, pq));
      expect_valid(lift(K, pq), over_k);
      for (const auto& [h, m] : over_k.factors) {
        // the norm of an irreducible factor of a Q-irreducible g is a power of g
        int owners = 0;
        for (const auto& [g, mg] : over_q.factors) {
          if (!divrem(lift(K, g), h).second.is_zero()) continue;
          ++owners;
          EXPECT_EQ(m, mg);
          const Polynomial n = norm(h);
          const int k = n.degree() / g.degree();
          EXPECT_EQ(n, g.pow(k)) << h.to_string();
        }
        EXPECT_EQ(owners, 1);
      }
    }
  }
}

TEST(FactorOverNf, RandomRoundTrip) {
  Random r(33);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 6; ++trial) {
      const Polynomial a = r.polynomial(K, static_cast<int>(r.integer(1, 3)), 3);
      const Polynomial b = r.polynomial(K, static_cast<int>(r.integer(0, 3)), 3);
      const Polynomial p = a * a * b;
      const auto f = factor_over_nf(p);
      expect_valid(p, f);
      for (const auto& [g, m] : f.factors) EXPECT_TRUE(is_irreducible(g)) << g.to_string();
    }
  }
}

TEST(FactorOverNf, IndependentOfSeed) {
  auto K = field("z^3 + z - 1");
  const Polynomial p = poly(K, "(t^3 + z*t - 1)*(t^2 - z)*(t^4 + 1)");
  const auto a = factor_over_nf(p, FactorOptions{1});
  const auto b = factor_over_nf(p, FactorOptions{987654321});
  EXPECT_EQ(a.to_string(), b.to_string());
}

TEST(FactorOverNf, ToStringShowsNonRationalUnit) {
  auto K = field("z^2 + 1");
  EXPECT_EQ(factor_over_nf(poly(K, "z*t^2 + z")).to_string(), "z * (t - z) * (t + z)");
}

TEST(SqrtInField, Examples) {
  const FieldPtr Q = NumberField::rationals();
  EXPECT_EQ(sqrt_in_field(FieldElement(Q, make_rational(9, 4)))->to_string(), "3/2");
  EXPECT_FALSE(sqrt_in_field(FieldElement(Q, 2L)).has_value());
  EXPECT_FALSE(sqrt_in_field(FieldElement(Q, -1L)).has_value());
  EXPECT_TRUE(sqrt_in_field(FieldElement(Q, 0L))->is_zero());

  auto K = field("z^2 + 1");
  auto r = sqrt_in_field(FieldElement(K, -1L));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, FieldElement(K, -1L));

  auto C8 = field("z^4 + 1");
  r = sqrt_in_field(FieldElement(C8, 2L));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, FieldElement(C8, 2L));
  EXPECT_FALSE(sqrt_in_field(FieldElement(C8, 3L)).has_value());
}

TEST(SqrtInField, SquaresOfRandomElements) {
  Random r(34);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 8; ++trial) {
      const FieldElement x = r.nonzero(K, 6, 3);
      const auto s = sqrt_in_field(x * x);
      ASSERT_TRUE(s);
      EXPECT_TRUE(*s == x || *s == -x);
    }
  }
}
