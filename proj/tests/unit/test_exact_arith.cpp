#include "support.hpp"

#include <pgate/error.hpp>

#include <gtest/gtest.h>

#include <functional>

using namespace pgate;
using namespace pgate::testing;

namespace {

FieldElement el(const FieldPtr& K, const std::string& s) { return parse_field_element(K, s); }

}  // namespace

TEST(NumberField, ReducesWithMinimalPolynomial) {
  auto K = field("z^3 + z - 1");
  EXPECT_EQ(el(K, "z") * el(K, "z^2"), el(K, "-z + 1"));
  EXPECT_EQ(el(K, "z").inverse(), el(K, "z^2 + 1"));
  EXPECT_EQ(el(K, "1/z"), el(K, "z^2 + 1"));
}

TEST(NumberField, RationalsAreDegreeOne) {
  auto Q = NumberField::rationals();
  EXPECT_EQ(Q->degree(), 1);
  EXPECT_EQ(el(Q, "2/3") + el(Q, "1/6"), el(Q, "5/6"));
  EXPECT_EQ(el(Q, "2/3 + 1/6").to_string(), "5/6");
}

TEST(NumberField, RejectsNonMonicAndReducible) {
  EXPECT_THROW(NumberField::create("z", {Rational(1), Rational(0), Rational(2)}),
               ArithmeticError);
  EXPECT_THROW(field("z^2 - 1"), ValidationError);
  EXPECT_THROW(field("z^4 + 4"), ValidationError);  // (z^2+2z+2)(z^2-2z+2)
  EXPECT_NO_THROW(field("z^4 + 1"));
  EXPECT_NO_THROW(field("z^8 + z^6 - 3*z^5 + 3*z^4 + 5*z^2 - z + 2"));
}

TEST(NumberField, DivisionByZeroAndFieldMismatch) {
  auto K = field("z^2 + 1");
  auto L = field("z^2 + 1");
  EXPECT_THROW(FieldElement(K).inverse(), ArithmeticError);
  EXPECT_THROW(el(K, "1") / el(K, "0"), ArithmeticError);
  EXPECT_THROW(el(K, "z") + el(field("z^2 - 3"), "z"), ArithmeticError);
  // Structurally equal fields built separately interoperate.
  EXPECT_EQ(el(K, "z") * el(L, "z"), el(K, "-1"));
}

TEST(CharacteristicPolynomial, Examples) {
  auto K = field("z^3 + z - 1");
  EXPECT_EQ(characteristic_polynomial(el(K, "z")),
            (std::vector<Rational>{Rational(-1), Rational(1), Rational(0), Rational(1)}));
  EXPECT_EQ(characteristic_polynomial(FieldElement(K)),
            (std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)}));
  EXPECT_EQ(characteristic_polynomial(el(K, "z/2")),
            (std::vector<Rational>{make_rational(-1, 8), make_rational(1, 4), Rational(0),
                                   Rational(1)}));
}

TEST(CharacteristicPolynomial, MatchesDeterminantOracle) {
  // det(x I - M_a) by cofactor expansion at sample points, against the
  // Faddeev-LeVerrier coefficients.
  Random r(11);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 10; ++trial) {
      const FieldElement a = r.element(K, 4, 3);
      const int d = K->degree();
      std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d));
      FieldElement basis(K, 1L);
      for (int j = 0; j < d; ++j) {
        const FieldElement col = a * basis;
        for (int i = 0; i < d; ++i) M[i][j] = col.coords()[i];
        basis *= FieldElement::generator(K);
      }
      const auto cp = characteristic_polynomial(a);
      for (long x = -2; x <= 2; ++x) {
        std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) A[i][j] = (i == j ? Rational(x) : Rational(0)) - M[i][j];
        }
        std::function<Rational(std::vector<std::vector<Rational>>)> det =
            [&](std::vector<std::vector<Rational>> m) -> Rational {
          if (m.size() == 1) return m[0][0];
          Rational s = 0;
          for (std::size_t j = 0; j < m.size(); ++j) {
            std::vector<std::vector<Rational>> minor;
            for (std::size_t i = 1; i < m.size(); ++i) {
              std::vector<Rational> row;
              for (std::size_t k = 0; k < m.size(); ++k) {
                if (k != j) row.push_back(m[i][k]);
              }
              minor.push_back(row);
            }
            s += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
          }
          return s;
        };
        Rational value = 0, power = 1;
        for (const auto& c : cp) {
          value += c * power;
          power *= x;
        }
        EXPECT_EQ(value, det(A));
      }
    }
  }
}

TEST(CharacteristicPolynomial, AnnihilatesElement) {
  Random r(12);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 20; ++trial) {
      const FieldElement a = r.element(K, 6, 4);
      FieldElement acc(K), power(K, 1L);
      for (const auto& c : characteristic_polynomial(a)) {
        acc += power * c;
        power *= a;
      }
      EXPECT_TRUE(acc.is_zero());
    }
  }
}

TEST(AlgebraicInteger, Examples) {
  auto K = field("z^3 + z - 1");
  EXPECT_TRUE(is_algebraic_integer(el(K, "z")));
  EXPECT_FALSE(is_algebraic_integer(el(K, "z/2")));
  auto L = field("z^8 + z^6 - 3*z^5 + 3*z^4 + 5*z^2 - z + 2");
  EXPECT_TRUE(is_algebraic_integer(
      el(L, "5/4*z^7 - 9/4*z^6 + 7/2*z^5 - 9/4*z^4 + 7*z^3 - 9*z^2 + 9/4*z + 23/2")));
}

TEST(AlgebraicInteger, ClosedUnderRingOperations) {
  Random r(13);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 10; ++trial) {
      const FieldElement a = r.element(K), b = r.element(K);
      ASSERT_TRUE(is_algebraic_integer(a));
      EXPECT_TRUE(is_algebraic_integer(a + b));
      EXPECT_TRUE(is_algebraic_integer(a * b));
    }
  }
}

TEST(FieldAxioms, RandomElements) {
  Random r(14);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 30; ++trial) {
      const FieldElement a = r.element(K, 9, 5), b = r.element(K, 9, 5), c = r.element(K, 9, 5);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Expression, ParsesLiteralSyntax) {
  auto K = field("z^3 + z - 1");
  EXPECT_EQ(el(K, "2z"), el(K, "2*z"));
  EXPECT_EQ(el(K, "(z+1)^2"), el(K, "z^2 + 2*z + 1"));
  EXPECT_EQ(el(K, "z^-1"), el(K, "z^2 + 1"));
  EXPECT_EQ(el(K, "-z^2"), -el(K, "z^2"));
  EXPECT_EQ(el(K, "5/4*z^7 - 9/4*z^6").to_string(), "-19/4*z^2 + 9/2*z - 1");
}

TEST(Expression, ReportsPositions) {
  auto K = field("z^2 + 1");
  try {
    parse_field_element(K, "z + w");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_field_element(K, "z +"), ParseError);
  EXPECT_THROW(parse_field_element(K, "(z"), ParseError);
  EXPECT_THROW(parse_field_element(K, "z / 0"), ParseError);
  EXPECT_THROW(parse_field_element(K, "z^"), ParseError);
  EXPECT_THROW(parse_field_element(K, ""), ParseError);
  EXPECT_THROW(parse_polynomial(K, "t^-1"), ParseError);
  EXPECT_THROW(parse_polynomial(K, "t / t"), ParseError);
}

TEST(Expression, RoundTripsToString) {
  Random r(15);
  for (const auto& K : small_fields()) {
    for (int trial = 0; trial < 20; ++trial) {
      const FieldElement a = r.element(K, 50, 7);
      EXPECT_EQ(parse_field_element(K, a.to_string()), a);
    }
  }
}
