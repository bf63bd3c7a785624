#include "support.hpp"

#include <pgate/error.hpp>

#include <gtest/gtest.h>

#include <functional>

using namespace pgate;
using namespace pgate::testing;

namespace {

// Field norm as the determinant of multiplication by q on K[t] viewed as a
// free Q[t]-module with basis 1, z, ..., z^{d-1}; cofactor expansion keeps it
// independent of the Sylvester/Bareiss path.
Polynomial norm_oracle(const Polynomial& q) {
  const FieldPtr& K = q.field();
  const FieldPtr Q = NumberField::rationals();
  const int d = K->degree();
  std::vector<std::vector<Polynomial>> M(d, std::vector<Polynomial>(d, Polynomial(Q)));
  FieldElement basis(K, 1L);
  for (int j = 0; j < d; ++j) {
    const Polynomial col = q * basis;
    for (int k = 0; k <= col.degree(); ++k) {
      for (int i = 0; i < d; ++i) {
        M[i][j] += Polynomial::monomial(FieldElement(Q, col.coeffs()[k].coords()[i]), k);
      }
    }
    basis *= FieldElement::generator(K);
  }
  std::function<Polynomial(const std::vector<std::vector<Polynomial>>&)> det =
      [&](const std::vector<std::vector<Polynomial>>& m) {
        if (m.size() == 1) return m[0][0];
        Polynomial s(Q);
        for (std::size_t j = 0; j < m.size(); ++j) {
          std::vector<std::vector<Polynomial>> minor;
          for (std::size_t i = 1; i < m.size(); ++i) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < m.size(); ++k) {
              if (k != j) row.push_back(m[i][k]);
            }
            minor.push_back(row);
          }
          Polynomial term = m[0][j] * det(minor);
          s = j % 2 ? s - term : s + term;
        }
        return s;
      };
  return det(M);
}

}  // namespace

TEST(Polynomial, RingOperations) {
  auto Q = NumberField::rationals();
  EXPECT_EQ(qpoly("t - 1") * qpoly("t + 1"), qpoly("t^2 - 1"));
  EXPECT_EQ(qpoly("t^2 + 3") + Polynomial(Q), qpoly("t^2 + 3"));
  EXPECT_EQ(qpoly("t^2 + 3") - qpoly("t^2 + 3"), Polynomial(Q));
  EXPECT_TRUE(Polynomial(Q).is_zero());
  EXPECT_EQ(Polynomial(Q).degree(), -1);
}

TEST(Polynomial, DivremOverNumberField) {
  auto K = field("z^3 + z - 1");
  auto [q, r] = divrem(poly(K, "t^3 + t - 1"), poly(K, "t - z"));
  EXPECT_EQ(q, poly(K, "t^2 + z*t + z^2 + 1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(divrem(poly(K, "t"), Polynomial(K)), ArithmeticError);
}

TEST(Polynomial, DivremRoundTrip) {
  Random r(21);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial a = r.polynomial(K, static_cast<int>(r.integer(0, 7)), 5, 3);
      const Polynomial b = r.polynomial(K, static_cast<int>(r.integer(0, 4)), 5, 3);
      auto [q, rem] = divrem(a, b);
      EXPECT_EQ(q * b + rem, a);
      EXPECT_LT(rem.degree(), b.degree());
    }
  }
}

TEST(Polynomial, Gcd) {
  auto K = field("z^3 + z - 1");
  EXPECT_EQ(gcd(qpoly("t^2 - 1"), qpoly("t - 1")), qpoly("t - 1"));
  EXPECT_EQ(gcd(qpoly("3*t^2 - 3"), Polynomial(NumberField::rationals())), qpoly("t^2 - 1"));
  EXPECT_EQ(gcd(poly(K, "(t - z)^2"), poly(K, "(t - z)*(t + 1)")), poly(K, "t - z"));
  EXPECT_THROW(gcd(Polynomial(K), Polynomial(K)), ArithmeticError);
}

TEST(Polynomial, GcdProperties) {
  Random r(22);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial p = r.polynomial(K, 3), q = r.polynomial(K, 3);
      const Polynomial g = r.polynomial(K, 2);
      const Polynomial h = gcd(p, q);
      EXPECT_TRUE(divrem(p, h).second.is_zero());
      EXPECT_TRUE(divrem(q, h).second.is_zero());
      EXPECT_EQ(gcd(p * g, q * g), g.monic() * h);
    }
  }
}

TEST(Polynomial, SquarefreeDecomposition) {
  auto parts = squarefree_decomposition(qpoly("(t - 1)^2*(t + 2)"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], std::make_pair(qpoly("t + 2"), 1));
  EXPECT_EQ(parts[1], std::make_pair(qpoly("t - 1"), 2));

  parts = squarefree_decomposition(qpoly("(t^2 + 1)^3"));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], std::make_pair(qpoly("t^2 + 1"), 3));

  auto K = field("z^2 + 1");
  parts = squarefree_decomposition(poly(K, "3*(t - z)^3*(t + z)*(t - 1)^3"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, poly(K, "t + z"));
  EXPECT_EQ(parts[1].first, poly(K, "(t - z)*(t - 1)"));
  EXPECT_EQ(parts[1].second, 3);
}

TEST(Polynomial, SquarefreeReassembles) {
  Random r(23);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial a = r.polynomial(K, 2, 3), b = r.polynomial(K, 1, 3);
      const Polynomial p = a * b.pow(2) * a;
      Polynomial back = Polynomial::constant(p.leading());
      for (const auto& [part, m] : squarefree_decomposition(p)) {
        EXPECT_EQ(gcd(part, part.derivative()).degree(), 0);
        back *= part.pow(m);
      }
      EXPECT_EQ(back, p);
    }
  }
}

TEST(Resultant, Examples) {
  auto Q = NumberField::rationals();
  EXPECT_EQ(norm(qpoly("t^2 + 1")), qpoly("t^2 + 1"));
  EXPECT_EQ(norm(poly(field("z^2 + 1"), "t - z")), qpoly("t^2 + 1"));
  EXPECT_EQ(norm(poly(field("z^3 + z - 1"), "t - z")), qpoly("t^3 + t - 1"));
  EXPECT_EQ(norm(poly(field("z^2 - 3"), "2")), qpoly("4"));
  EXPECT_TRUE(norm(Polynomial(field("z^2 - 3"))).is_zero());
  EXPECT_THROW(resultant({Rational(1)}, qpoly("t")), ArithmeticError);
  (void)Q;
}

TEST(Resultant, MatchesMultiplicationMatrixDeterminant) {
  Random r(24);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 8; ++trial) {
      const Polynomial q = r.polynomial(K, static_cast<int>(r.integer(0, 4)), 4, 3);
      EXPECT_EQ(norm(q), norm_oracle(q)) << q.to_string();
    }
  }
}

TEST(Resultant, IsMultiplicative) {
  Random r(25);
  auto K = field("z^3 + z - 1");
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial a = r.polynomial(K, 2), b = r.polynomial(K, 3);
    EXPECT_EQ(norm(a * b), norm(a) * norm(b));
  }
}

TEST(Substitution, NegTSquared) {
  EXPECT_EQ(substitute_neg_t_squared(qpoly("t + 1")), qpoly("-t^2 + 1"));
  EXPECT_EQ(substitute_neg_t_squared(qpoly("t^2 - 1")), qpoly("t^4 - 1"));
  EXPECT_EQ(substitute_neg_t_squared(qpoly("7")), qpoly("7"));
  Random r(26);
  for (const auto& K : small_fields()) {
    const Polynomial p = r.polynomial(K, 5);
    const Polynomial s = substitute_neg_t_squared(p);
    EXPECT_EQ(s.degree(), 2 * p.degree());
    for (int k = 1; k <= s.degree(); k += 2) EXPECT_TRUE(s.coeff(k).is_zero());
  }
}

TEST(UnitNormalize, Examples) {
  // -t^3 + t^2 = -t^2 (t - 1) = (+1) t^2 (1 - t)
  UnitNormalForm u = unit_normalize(qpoly("-t^3 + t^2"));
  EXPECT_EQ(u.poly, qpoly("1 - t"));
  EXPECT_EQ(u.shift, 2);
  EXPECT_EQ(u.sign, 1);

  u = unit_normalize(qpoly("t^2 - t + 1"));
  EXPECT_EQ(u.poly, qpoly("t^2 - t + 1"));
  EXPECT_EQ(u.shift, 0);
  EXPECT_EQ(u.sign, 1);

  auto K = field("z^3 + z - 1");
  u = unit_normalize(poly(K, "-z*t"));
  EXPECT_EQ(u.poly, poly(K, "z"));
  EXPECT_EQ(u.shift, 1);
  EXPECT_EQ(u.sign, -1);

  EXPECT_THROW(unit_normalize(Polynomial(K)), ArithmeticError);
}

TEST(UnitNormalize, InvariantUnderUnitsAndIdempotent) {
  Random r(27);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial p = r.polynomial(K, 4);
      const UnitNormalForm u = unit_normalize(p);
      EXPECT_EQ(unit_normalize(u.poly).poly, u.poly);
      const int k = static_cast<int>(r.integer(0, 5));
      EXPECT_EQ(unit_normalize(-p.shifted(k)).poly, u.poly);
      EXPECT_EQ(unit_normalize(p.shifted(k)).poly, u.poly);
      EXPECT_EQ(Polynomial::constant(FieldElement(K, static_cast<long>(u.sign))) *
                    u.poly.shifted(u.shift),
                p);
    }
  }
}

TEST(Polynomial, ToStringRoundTrips) {
  Random r(28);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial p = r.polynomial(K, 6, 30, 7);
      EXPECT_EQ(parse_polynomial(K, p.to_string()), p) << p.to_string();
    }
  }
  EXPECT_EQ(qpoly("0").to_string(), "0");
  EXPECT_EQ(qpoly("-t^2 + 1").to_string(), "-t^2 + 1");
  EXPECT_EQ(poly(field("z^2 + 1"), "(1 + z)*t - 1/2").to_string(), "(z + 1)*t - 1/2");
}

TEST(Polynomial, ShiftAndScaleVariable) {
  auto K = field("z^2 - 3");
  const Polynomial p = poly(K, "t^3 - z*t + 2");
  const FieldElement c = parse_field_element(K, "z + 1");
  const Polynomial shifted = p.shift_variable(c);
  const FieldElement x = parse_field_element(K, "2*z - 5");
  EXPECT_EQ(shifted.evaluate(x), p.evaluate(x + c));
  EXPECT_EQ(p.scale_variable(c).evaluate(x), p.evaluate(c * x));
}
