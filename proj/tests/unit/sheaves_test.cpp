#include <gtest/gtest.h>

#include "nilcone/errors.hpp"
#include "nilcone/sheaves.hpp"
#include "test_util.hpp"

using namespace nilcone;
using namespace nilcone::testing;

namespace {

const SplitBundle kTrivial2({0, 0});

LineSubsheaf column(int m, const SplitBundle& e, std::vector<BinaryForm> f) {
  return LineSubsheaf(m, e, std::move(f));
}

}  // namespace

TEST(SheafMapTest, SlotRuleIsEnforced) {
  EXPECT_THROW(SheafMap(kTrivial2, kTrivial2, {{Z(), C(0)}, {C(0), C(1)}}), InputError);
  EXPECT_THROW(SheafMap(SplitBundle({1}), SplitBundle({0}), {{Z()}}), InputError);
  const SheafMap ok(SplitBundle({1}), SplitBundle({0}), {{BinaryForm::zero(0)}});
  EXPECT_EQ(ok.entry(0, 0).degree(), -1);
}

TEST(SheafMapTest, Compose) {
  const SplitBundle e = SplitBundle::sl2(1);
  const SheafMap f(SplitBundle({-2}), e, {{Z().pow(3)}, {W()}});
  EXPECT_EQ(compose(SheafMap::identity(e), f), f);

  const SheafMap phi(kTrivial2, kTrivial2.twisted(2), {{BinaryForm::zero(2), Z() * Z()},
                                                        {BinaryForm::zero(2), BinaryForm::zero(2)}});
  const SheafMap v(SplitBundle({0}), kTrivial2, {{C(0)}, {C(1)}});
  const SheafMap composed = compose(phi, v);
  EXPECT_EQ(composed.entry(0, 0), Z() * Z());
  EXPECT_TRUE(composed.entry(1, 0).is_zero());

  const auto zero = SheafMap::zero(SplitBundle({-3}), SplitBundle({-2}));
  const SheafMap g(SplitBundle({-2}), SplitBundle({0}), {{Z() * W()}});
  EXPECT_TRUE(compose(g, zero).is_zero());
  EXPECT_THROW(compose(f, f), InputError);
}

TEST(DefectTest, Examples) {
  EXPECT_TRUE(defect(column(-1, kTrivial2, {Z(), W()})).is_empty());
  const auto d = defect(column(-1, kTrivial2, {Z(), C(0) * Z()}));
  EXPECT_EQ(d.form(), Z());
  EXPECT_EQ(d.degree(), 1);
  EXPECT_EQ(defect(column(-2, kTrivial2, {Z() * Z(), Z() * W()})).form(), Z());
  EXPECT_THROW(column(-1, kTrivial2, {BinaryForm::zero(1), BinaryForm::zero(1)}), InputError);
}

TEST(NormalizationTest, Examples) {
  const auto sub = column(-1, kTrivial2, {Z(), W()});
  EXPECT_EQ(normalization(sub), sub);
  const auto n = normalization(column(-2, kTrivial2, {Z() * Z(), Z() * W()}));
  EXPECT_EQ(n.source_degree(), -1);
  EXPECT_EQ(n.embedding()[0], Z());
  EXPECT_EQ(n.embedding()[1], W());
  const auto n2 = normalization(column(-2, kTrivial2, {Z() * Z(), BinaryForm::zero(2)}));
  EXPECT_EQ(n2.source_degree(), 0);
  EXPECT_EQ(n2.embedding()[0], C(1));
  EXPECT_TRUE(n2.embedding()[1].is_zero());
}

TEST(DefectFittingTest, Examples) {
  EXPECT_TRUE(defect_agrees_with_fitting(column(-1, kTrivial2, {Z(), W()})));
  EXPECT_TRUE(defect_agrees_with_fitting(column(-2, kTrivial2, {Z() * Z(), Z() * W()})));
  const auto at_infinity = column(-2, kTrivial2, {Z() * W(), W() * W()});
  EXPECT_EQ(defect(at_infinity).form(), W());
  EXPECT_TRUE(defect_agrees_with_fitting(at_infinity));
}

TEST(QuasiMapTest, Examples) {
  const auto genuine = quasimap_classify(column(-1, kTrivial2, {2 * Z() + 3 * W(), Z() - W()}));
  EXPECT_TRUE(std::holds_alternative<GenuineMap>(genuine));
  const auto degenerate = quasimap_classify(column(-1, kTrivial2, {Z(), Z()}));
  ASSERT_TRUE(std::holds_alternative<QuasiMapWithDefect>(degenerate));
  EXPECT_EQ(std::get<QuasiMapWithDefect>(degenerate).defect.form(), Z());
  EXPECT_EQ(quasimap_determinant(column(-1, kTrivial2, {Z(), Z()})), 0);
  EXPECT_TRUE(std::holds_alternative<GenuineMap>(quasimap_classify(column(-1, kTrivial2, {W(), Z()}))));
  EXPECT_EQ(quasimap_parameter_dimension(1), 3);
  EXPECT_THROW(quasimap_classify(column(1, kTrivial2, {BinaryForm::zero(-1), BinaryForm::zero(-1)})),
               InputError);
}

TEST(EmbeddingBoundTest, NonpositiveDegreesAlwaysEmbed) {
  for (int d = 0; d <= 4; ++d) {
    for (int m = -6; m <= 6; ++m) {
      EXPECT_EQ(admits_embedding(m, SplitBundle::sl2(d)), m <= d);
      if (m <= 0) EXPECT_TRUE(admits_embedding(m, SplitBundle::sl2(d)));
    }
  }
}

TEST(SheafPropertyTest, NormalizationDefectAndFittingAgree) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dd(0, 2), gd(0, 3), pd(0, 2), coin(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = dd(rng);
    const SplitBundle e = SplitBundle::sl2(d);
    // Random saturated column times a random split cofactor.
    const int top_deg = pd(rng);
    const int m = d - top_deg;
    BinaryForm top = random_split_form(rng, top_deg);
    BinaryForm bottom = -d - m >= 0 ? random_form(rng, -d - m) : BinaryForm::zero(-d - m);
    if (coin(rng) == 0) top = BinaryForm::zero(top_deg);
    if (top.is_zero() && bottom.is_zero()) continue;
    const BinaryForm g = random_split_form(rng, gd(rng));
    const int deg_g = g.degree();
    const LineSubsheaf lambda(m - deg_g, e, {g * top, g * bottom});

    const auto df = defect(lambda);
    const auto n = normalization(lambda);
    EXPECT_EQ(n.source_degree(), lambda.source_degree() + df.degree());
    EXPECT_TRUE(defect(n).is_empty());
    EXPECT_TRUE(defect_agrees_with_fitting(lambda)) << lambda.to_string();

    const Rational c(-7, 3);
    EXPECT_EQ(defect(LineSubsheaf(lambda.source_degree(), e, {c * lambda.embedding()[0], c * lambda.embedding()[1]})),
              df);
    EXPECT_TRUE(lambda.same_point(LineSubsheaf(lambda.source_degree(), e,
                                               {c * lambda.embedding()[0], c * lambda.embedding()[1]})));
  }
}
