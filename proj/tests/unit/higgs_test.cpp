#include <gtest/gtest.h>

#include "nilcone/errors.hpp"
#include "nilcone/higgs.hpp"
#include "test_util.hpp"

using namespace nilcone;
using namespace nilcone::testing;

namespace {

HiggsField field(int d, int ell, BinaryForm p, BinaryForm q, BinaryForm r) {
  return HiggsField(d, ell, std::move(p), std::move(q), std::move(r));
}

HiggsField worked_example() { return field(0, 2, BinaryForm::zero(2), Z() * Z(), BinaryForm::zero(2)); }
HiggsField regular_example() { return field(0, 2, Z() * W(), Z() * Z(), -(W() * W())); }

}  // namespace

TEST(HiggsFieldTest, ConstructionChecks) {
  EXPECT_THROW(field(0, 3, BinaryForm::zero(3), BinaryForm::zero(3), BinaryForm::zero(3)), InputError);
  EXPECT_THROW(field(-1, 2, BinaryForm::zero(2), BinaryForm::zero(0), BinaryForm::zero(4)), InputError);
  EXPECT_THROW(field(0, 2, Z(), Z() * Z(), BinaryForm::zero(2)), InputError);
  // ell - 2d < 0 forces r = 0.
  EXPECT_THROW(field(2, 2, BinaryForm::zero(2), BinaryForm::zero(6), C(1)), InputError);
  const auto phi = field(2, 2, BinaryForm::zero(2), Z().pow(6), BinaryForm::zero(0));
  EXPECT_EQ(phi.r().degree(), -2);
}

TEST(NilpotentTest, Examples) {
  EXPECT_TRUE(is_nilpotent(worked_example()));
  // det = -(zw)^2 + z^2 w^2 = 0.
  EXPECT_TRUE(regular_example().negated_determinant().is_zero());
  EXPECT_TRUE(is_nilpotent(regular_example()));
  const auto non = field(0, 2, BinaryForm::zero(2), Z() * Z(), W() * W());
  EXPECT_EQ(non.negated_determinant(), Z() * Z() * W() * W());
  EXPECT_FALSE(is_nilpotent(non));
}

TEST(CanonicalFormTest, WorkedExample) {
  const auto c = canonical_form(worked_example());
  EXPECT_EQ(c.s, C(1));
  EXPECT_TRUE(c.t.is_zero());
  EXPECT_EQ(c.h, -(Z() * Z()));
  EXPECT_EQ(c.k, 0);
  EXPECT_EQ(reassemble(c, 0, 2), worked_example());
}

TEST(CanonicalFormTest, RegularExample) {
  const auto c = canonical_form(regular_example());
  // (s, t) = (-z, w) up to the sign convention; the kernel is O(-1).
  EXPECT_EQ(c.s, Z());
  EXPECT_EQ(c.t, -W());
  EXPECT_EQ(c.h, C(-1));
  EXPECT_EQ(c.k, -1);
  EXPECT_EQ(reassemble(c, 0, 2), regular_example());
}

TEST(CanonicalFormTest, Errors) {
  EXPECT_THROW(canonical_form(field(0, 2, BinaryForm::zero(2), BinaryForm::zero(2), BinaryForm::zero(2))),
               InputError);
  EXPECT_THROW(canonical_form(field(0, 2, BinaryForm::zero(2), Z() * Z(), W() * W())), InputError);
}

TEST(KernelTest, Examples) {
  const auto k0 = kernel_subbundle(worked_example());
  EXPECT_EQ(k0.source_degree(), 0);
  EXPECT_EQ(k0.embedding()[0], C(1));
  EXPECT_TRUE(compose(worked_example().as_map(), k0.as_map()).is_zero());

  const auto k1 = kernel_subbundle(regular_example());
  EXPECT_EQ(k1.source_degree(), -1);
  EXPECT_TRUE(k1.same_point(LineSubsheaf(-1, SplitBundle::sl2(0), {-Z(), W()})));
  EXPECT_TRUE(compose(regular_example().as_map(), k1.as_map()).is_zero());
  EXPECT_TRUE(defect(k1).is_empty());
}

TEST(IrregularityTest, Examples) {
  const auto irr = irregularity(worked_example());
  EXPECT_EQ(irr.form(), Z() * Z());
  EXPECT_EQ(irr.degree(), 2);
  EXPECT_FALSE(irr.is_reduced());
  EXPECT_TRUE(irregularity(regular_example()).is_empty());
}

TEST(BuildFromTest, Examples) {
  const SplitBundle e = SplitBundle::sl2(0);
  EXPECT_EQ(build_from(LineSubsheaf(0, e, {C(1), C(0)}), -(Z() * Z()), 2), worked_example());
  EXPECT_EQ(build_from(LineSubsheaf(-1, e, {-Z(), W()}), C(-1), 2), regular_example());
  EXPECT_THROW(build_from(LineSubsheaf(-1, e, {-Z(), W()}), BinaryForm::zero(0), 2), InputError);
  EXPECT_THROW(build_from(LineSubsheaf(-1, e, {-Z(), W()}), Z(), 2), InputError);
  EXPECT_THROW(build_from(LineSubsheaf(-2, e, {Z() * Z(), Z() * W()}), Z() * Z(), 2), InputError);

  const auto kernel = LineSubsheaf(-1, e, {Z() + W(), 2 * W()});
  const auto h = (Z() - W()) * W();
  const auto phi = build_from(kernel, h, 4);
  EXPECT_TRUE(kernel_subbundle(phi).same_point(kernel));
  EXPECT_EQ(irregularity(phi), DivisorP1(h));
}

TEST(HiggsPropertyTest, RoundTripAndIrregularityDegree) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> dd(0, 2), half_ell(0, 3), coef(-4, 4);
  int built = 0;
  while (built < 300) {
    const int d = dd(rng);
    const int ell = 2 * half_ell(rng);
    // Kernel O(k) with k = d (s constant) or -ell/2 <= k <= -d.
    std::vector<int> ks{d};
    for (int k = -ell / 2; k <= -d; ++k) ks.push_back(k);
    const int k = ks[std::uniform_int_distribution<std::size_t>(0, ks.size() - 1)(rng)];
    if (2 * k + ell < 0) continue;
    BinaryForm s = d - k > 0 ? random_split_form(rng, d - k) : C(coef(rng) == 0 ? 1 : 2);
    BinaryForm t = -d - k >= 0 ? random_split_form(rng, -d - k) : BinaryForm::zero(-d - k);
    if (k == d && d > 0) t = BinaryForm::zero(-2 * d);
    const LineSubsheaf kernel(k, SplitBundle::sl2(d), {s, t});
    if (!defect(kernel).is_empty()) continue;
    const BinaryForm h = Rational(coef(rng) == 0 ? 1 : coef(rng)) * random_split_form(rng, 2 * k + ell);
    if (h.is_zero()) continue;
    const auto phi = build_from(kernel, h, ell);
    ++built;
    ASSERT_TRUE(is_nilpotent(phi));
    const auto c = canonical_form(phi);
    EXPECT_EQ(reassemble(c, d, ell), phi);
    EXPECT_TRUE(kernel_subbundle(phi).same_point(kernel));
    EXPECT_EQ(c.k, k);
    EXPECT_TRUE(defect(kernel_subbundle(phi)).is_empty());
    EXPECT_EQ(irregularity(phi).degree(), 2 * c.k + ell);
    EXPECT_GE(2 * c.k, -ell);
    EXPECT_EQ(2 * c.k == -ell, c.h.degree() == 0);
    // Cayley-Hamilton for traceless 2x2: φ^2 = -det(φ) id.
    EXPECT_TRUE(composed_square(phi).is_zero());
  }
}

TEST(HiggsPropertyTest, CayleyHamiltonOnRandomTracelessFields) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto phi = HiggsField(0, 2, random_form(rng, 2, 2), random_form(rng, 2, 2), random_form(rng, 2, 2));
    const auto sq = composed_square(phi);
    const auto nd = phi.negated_determinant();
    EXPECT_EQ(sq.entry(0, 0), nd);
    EXPECT_EQ(sq.entry(1, 1), nd);
    EXPECT_TRUE(sq.entry(0, 1).is_zero());
    EXPECT_TRUE(sq.entry(1, 0).is_zero());
  }
}
