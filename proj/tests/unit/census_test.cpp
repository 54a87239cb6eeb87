#include <gtest/gtest.h>

#include "nilcone/census.hpp"
#include "nilcone/errors.hpp"

using namespace nilcone;
using namespace nilcone::census;

TEST(CensusTest, Regimes) {
  EXPECT_EQ(regime(0, 4), Regime::HighDegree);
  EXPECT_EQ(regime(2, 2), Regime::LowPositive);
  EXPECT_EQ(regime(2, 0), Regime::NonPositive);
  EXPECT_EQ(regime(2, -4), Regime::NonPositive);
  EXPECT_THROW(regime(1, 3), InputError);
  EXPECT_THROW(regime(-1, 2), InputError);
}

TEST(CensusTest, Examples) {
  const auto g0 = nilcone_census({0, 4, std::nullopt}, -2, 3);
  EXPECT_EQ(g0.dimension, 3);
  EXPECT_EQ(g0.square_root_count, 1u);
  EXPECT_EQ(g0.min_degree, -2);
  EXPECT_FALSE(g0.zero_section_present);
  ASSERT_EQ(g0.rows.size(), 6u);
  EXPECT_TRUE(g0.rows[0].square_root);
  for (const auto& row : g0.rows) {
    EXPECT_EQ(*row.bundle_rank + *row.bun_b_dimension, 3);
    EXPECT_EQ(row.dimension, 3);
  }

  EXPECT_EQ(nilcone_census({1, 2, std::nullopt}, -1, 2).dimension, 2);
  const auto g2 = nilcone_census({2, 4, std::nullopt}, -2, 0);
  EXPECT_EQ(g2.dimension, 5);
  EXPECT_EQ(g2.square_root_count, 16u);
  EXPECT_EQ(g2.rows[0].count, 16u);

  const auto low = nilcone_census({2, 2, std::nullopt}, -1, 1);
  EXPECT_TRUE(low.zero_section_present);
  EXPECT_FALSE(low.dimension.has_value());

  const auto one = nilcone_census({0, 4, 1}, -10, 10);
  ASSERT_EQ(one.rows.size(), 1u);
  EXPECT_EQ(one.rows[0].d, 1);
  EXPECT_THROW(nilcone_census({0, 3, std::nullopt}, 0, 1), InputError);
}

TEST(CensusTest, GenusOneBookkeeping) {
  for (int degL = 2; degL <= 12; degL += 2) {
    const auto r = nilcone_census({1, degL, std::nullopt}, -degL / 2, 6);
    EXPECT_EQ(*r.dimension, degL);
    EXPECT_EQ(r.rows[0].bundle_rank, 1);
    EXPECT_EQ(*r.rows[0].bun_b_dimension + *r.rows[0].bundle_rank, degL);
  }
}

TEST(CensusTest, StableCounts) {
  EXPECT_EQ(stable_census(2, 4), 2);
  EXPECT_EQ(stable_census(2, 2), 2);
  EXPECT_EQ(stable_census(2, 0), 1);
  EXPECT_EQ(stable_census(2, -6), 1);
  EXPECT_THROW(stable_census(1, 4), InputError);
  for (int g = 2; g <= 6; ++g) {
    for (int degL = -8; degL < 30; degL += 2) EXPECT_LE(stable_census(g, degL), stable_census(g, degL + 2));
  }
}

TEST(CensusTest, Formulas) {
  EXPECT_EQ(bun_b_dimension(3, 0), -8);
  EXPECT_EQ(bun_b_dimension(0, 1), 0);
  EXPECT_EQ(bun_b_dimension(1, 2), 0);
  EXPECT_EQ(riemann_roch(0, 2), 3);
  EXPECT_EQ(riemann_roch(2, 1), 0);
  EXPECT_EQ(springer_bundle_rank(0, 0, 2), 3);
  EXPECT_EQ(springer_bundle_rank(1, 0, 2), 2);
  EXPECT_EQ(springer_bundle_rank(1, -1, 2), 1);
  EXPECT_FALSE(springer_bundle_rank(2, 0, 2).has_value());
  EXPECT_THROW(springer_bundle_rank(0, -2, 2), InputError);
}

TEST(CensusTest, CgSmoothness) {
  EXPECT_TRUE(cg_smoothness(3, 2, false, 1, 1).smooth);
  EXPECT_TRUE(cg_smoothness(3, 2, true, 1, 1).smooth);
  EXPECT_FALSE(cg_smoothness(2, 2, true, 2, 1).smooth);
  EXPECT_TRUE(cg_smoothness(2, 2, true, 1, 0).smooth);
  EXPECT_TRUE(cg_smoothness(2, 5, true, 4, 0).smooth);
  EXPECT_EQ(cg_smoothness(3, 2, false, 1, 1).dimension, 2);
  EXPECT_THROW(cg_smoothness(2, 2, true, 3, 0), InputError);
  EXPECT_THROW(cg_smoothness(1, 2, true, 2, 0), InputError);
}
