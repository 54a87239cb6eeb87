#include <gtest/gtest.h>

#include "nilcone/errors.hpp"
#include "nilcone/forms.hpp"
#include "test_util.hpp"

using namespace nilcone;
using namespace nilcone::testing;

TEST(RationalTest, CanonicalText) {
  EXPECT_EQ(to_string(parse_rational("6/-4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("7")), "7/1");
  EXPECT_EQ(to_string(parse_rational("-0/5")), "0/1");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  EXPECT_THROW(parse_rational("1.5"), InputError);
}

TEST(BinaryFormTest, CoefficientCountMustMatchDegree) {
  EXPECT_THROW(BinaryForm(2, {1, 2}), InputError);
  EXPECT_NO_THROW(BinaryForm(2, {1, 0, 2}));
  EXPECT_EQ(BinaryForm::zero(-3).degree(), -3);
  EXPECT_TRUE(BinaryForm::zero(-3).coeffs().empty());
}

TEST(BinaryFormTest, Add) {
  EXPECT_EQ(add(Z() + W(), Z() - W()), BinaryForm::linear(2, 0));
  const auto f = BinaryForm(2, {1, -2, 3});
  EXPECT_EQ(add(f, BinaryForm::zero(2)), f);
  const auto sum = add(Z() * Z() + W() * W(), -(Z() * Z()));
  EXPECT_EQ(sum, W() * W());
  EXPECT_EQ(sum.degree(), 2);
  EXPECT_THROW(add(Z(), C(1)), InputError);
}

TEST(BinaryFormTest, Mul) {
  EXPECT_EQ(mul(Z(), W()), BinaryForm(2, {0, 1, 0}));
  const auto f = BinaryForm(3, {1, 0, -1, 2});
  EXPECT_EQ(mul(f, C(1)), f);
  EXPECT_EQ(mul(Z() + W(), Z() - W()), BinaryForm(2, {1, 0, -1}));
  EXPECT_EQ(mul(BinaryForm::zero(-2), Z().pow(3)).degree(), 1);
}

TEST(BinaryFormTest, ZeroFormsOfDifferentDegreesDifferButAreZero) {
  EXPECT_NE(BinaryForm::zero(1), BinaryForm::zero(2));
  EXPECT_TRUE(BinaryForm::zero(1).is_zero());
  EXPECT_TRUE(BinaryForm::zero(2).is_zero());
}

TEST(BinaryFormTest, Gcd) {
  EXPECT_EQ(gcd(Z() * Z(), Z() * W()), Z());
  const auto a = Z() * Z() - W() * W();
  const auto b = Z() - W();
  // Oracle: a = b * (z + w) by direct expansion.
  ASSERT_EQ(b * (Z() + W()), a);
  EXPECT_EQ(gcd(a, b), Z() - W());
  EXPECT_EQ(gcd(BinaryForm(2, {3, 1, 5}), C(1)), C(1));
  EXPECT_THROW(gcd(BinaryForm::zero(1), BinaryForm::zero(2)), InputError);
  EXPECT_EQ(gcd(BinaryForm::zero(2), 3 * Z()), Z());
}

TEST(BinaryFormTest, GcdTracksPointAtInfinityOnBothCharts) {
  const auto f = W().pow(3) * (Z() + W());
  const auto g = W().pow(2) * Z();
  EXPECT_EQ(gcd(f, g, Chart::W), W().pow(2));
  EXPECT_EQ(gcd(f, g, Chart::Z), W().pow(2));
  const auto u = Z().pow(2) * (Z() - 2 * W());
  const auto v = Z() * W() * (Z() - 2 * W());
  EXPECT_EQ(gcd(u, v, Chart::Z), gcd(u, v, Chart::W));
  EXPECT_EQ(gcd(u, v), (Z() * (Z() - 2 * W())));
}

TEST(BinaryFormTest, ExactDiv) {
  EXPECT_EQ(exact_div(Z() * Z() * W(), Z()), Z() * W());
  const auto q = exact_div(Z() * Z() - W() * W(), Z() - W());
  ASSERT_TRUE(q);
  EXPECT_EQ(*q * (Z() - W()), Z() * Z() - W() * W());
  EXPECT_EQ(*q, Z() + W());
  EXPECT_FALSE(exact_div(Z() * Z(), W()));
  EXPECT_FALSE(exact_div(Z(), Z() * Z()));
  EXPECT_THROW(exact_div(Z(), BinaryForm::zero(1)), InputError);
  EXPECT_EQ(exact_div(BinaryForm::zero(3), Z()), BinaryForm::zero(2));
}

TEST(BinaryFormTest, FactorIntoDivisors) {
  auto f = factor_into_divisors(Z() * Z() * W());
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].divisor.form(), Z());
  EXPECT_EQ(f[0].multiplicity, 2);
  EXPECT_EQ(f[1].divisor.form(), W());
  EXPECT_EQ(f[1].multiplicity, 1);

  f = factor_into_divisors(Z() * Z() - W() * W());
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].divisor.form(), Z() - W());
  EXPECT_EQ(f[1].divisor.form(), Z() + W());
  EXPECT_EQ(f[0].divisor.form() * f[1].divisor.form(), Z() * Z() - W() * W());

  f = factor_into_divisors(Z() * Z() + W() * W());
  ASSERT_EQ(f.size(), 1u);
  EXPECT_TRUE(f[0].symbolic);
  EXPECT_EQ(f[0].multiplicity, 1);
  EXPECT_EQ(f[0].divisor.form(), Z() * Z() + W() * W());
  // No rational root: z^2 + w^2 is positive on every rational point.
  for (int a = -5; a <= 5; ++a) EXPECT_NE((Z() * Z() + W() * W()).evaluate(a, 1), 0);

  EXPECT_THROW(factor_into_divisors(BinaryForm::zero(2)), InputError);
  EXPECT_TRUE(factor_into_divisors(C(7)).empty());
}

TEST(BinaryFormTest, FactorMixedMultiplicities) {
  const auto f = Rational(3, 2) * (2 * Z() - W()).pow(3) * (Z() * Z() + W() * W()).pow(2) * W();
  const auto factors = factor_into_divisors(f);
  BinaryForm product;
  bool saw_block = false;
  for (const auto& x : factors) {
    product = product * x.divisor.form().pow(x.multiplicity);
    if (x.symbolic) {
      saw_block = true;
      EXPECT_EQ(x.multiplicity, 2);
    }
  }
  EXPECT_TRUE(saw_block);
  EXPECT_EQ(product.normalized(), f.normalized());
}

TEST(BinaryFormTest, SquarefreeOnBothCharts) {
  EXPECT_TRUE(is_squarefree(Z() * W()));
  EXPECT_FALSE(is_squarefree(Z() * Z()));
  EXPECT_FALSE(is_squarefree(W() * W() * Z()));
  EXPECT_TRUE(is_squarefree(C(5)));
  EXPECT_TRUE(is_squarefree(Z() * Z() + W() * W()));
}

TEST(DivisorTest, NormalizationAndArithmetic) {
  const DivisorP1 a(3 * Z() - 6 * W());
  EXPECT_EQ(a.form(), Z() - 2 * W());
  EXPECT_EQ(DivisorP1(a.form()), a);
  EXPECT_EQ(DivisorP1(4 * W()), DivisorP1::point(1, 0));
  EXPECT_TRUE(DivisorP1().is_empty());
  const DivisorP1 b(Z());
  EXPECT_EQ((a + b).degree(), a.degree() + b.degree());
  EXPECT_TRUE(b.times(2).leq(DivisorP1(Z().pow(3))));
  EXPECT_FALSE(b.times(2).leq(DivisorP1(Z() * W())));
  EXPECT_FALSE(b.times(2).is_reduced());
  EXPECT_THROW(DivisorP1(BinaryForm::zero(1)), InputError);
}

class FormPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20261016};
  static constexpr int kIterations = 300;
};

TEST_F(FormPropertyTest, GcdIsMultiplicative) {
  std::uniform_int_distribution<int> deg(0, 3);
  for (int i = 0; i < kIterations; ++i) {
    const auto f = random_nonzero_form(rng, deg(rng));
    const auto g = random_nonzero_form(rng, deg(rng));
    const auto h = random_split_form(rng, deg(rng));
    EXPECT_EQ(gcd(f * h, g * h), (gcd(f, g) * h).normalized());
  }
}

TEST_F(FormPropertyTest, ExactDivInvertsMul) {
  std::uniform_int_distribution<int> deg(0, 4);
  for (int i = 0; i < kIterations; ++i) {
    const auto f = random_form(rng, deg(rng));
    const auto g = random_nonzero_form(rng, deg(rng));
    const auto q = exact_div(f * g, g);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, f);
  }
}

TEST_F(FormPropertyTest, LinearFactorizationsMultiplyBack) {
  std::uniform_int_distribution<int> deg(1, 6);
  for (int i = 0; i < kIterations; ++i) {
    const auto f = Rational(-2, 3) * random_split_form(rng, deg(rng));
    BinaryForm product;
    for (const auto& x : factor_into_divisors(f)) {
      EXPECT_FALSE(x.symbolic);
      EXPECT_EQ(x.divisor.degree(), 1);
      product = product * x.divisor.form().pow(x.multiplicity);
    }
    EXPECT_EQ(product.normalized(), f.normalized());
  }
}

TEST_F(FormPropertyTest, ChartsAgreeOnGcd) {
  std::uniform_int_distribution<int> deg(0, 4);
  for (int i = 0; i < kIterations; ++i) {
    const auto common = random_split_form(rng, deg(rng));
    const auto f = common * random_split_form(rng, deg(rng));
    const auto g = common * random_form(rng, deg(rng));
    EXPECT_EQ(gcd(f, g, Chart::W), gcd(f, g, Chart::Z));
  }
}
