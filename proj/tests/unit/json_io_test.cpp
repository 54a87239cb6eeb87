#include <gtest/gtest.h>

#include "nilcone/checks/corpus.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/json_io.hpp"
#include "test_util.hpp"

using namespace nilcone;
using namespace nilcone::json_io;
using namespace nilcone::testing;

TEST(JsonIoTest, Rationals) {
  EXPECT_EQ(rational_to_json(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(rational_to_json(Rational(5)), "5/1");
  EXPECT_EQ(rational_from_json("4/-6"), Rational(-2, 3));
  EXPECT_EQ(rational_from_json(7), Rational(7));
  EXPECT_THROW(rational_from_json("1/0"), InputError);
  EXPECT_THROW(rational_from_json("x"), InputError);
  EXPECT_THROW(rational_from_json(0.5), InputError);
}

TEST(JsonIoTest, Forms) {
  const auto j = form_to_json(Z() * Z() - Rational(1, 2) * W() * W());
  EXPECT_EQ(j.dump(), R"({"coeffs":["1/1","0/1","-1/2"],"degree":2})");
  EXPECT_EQ(form_from_json(j), Z() * Z() - Rational(1, 2) * W() * W());
  EXPECT_EQ(form_from_json(form_to_json(BinaryForm::zero(-3))), BinaryForm::zero(-3));
  EXPECT_THROW(form_from_json(Json::parse(R"({"degree":2,"coeffs":["1"]})")), InputError);
  EXPECT_THROW(form_from_json(Json::parse(R"({"coeffs":["1"]})")), InputError);
  EXPECT_THROW(form_from_json(Json::parse(R"({"degree":-1,"coeffs":["1"]})")), InputError);
}

TEST(JsonIoTest, MapSlotErrorsNameTheSlot) {
  const auto j = Json::parse(R"({"source":{"twists":[-1]},"target":{"twists":[0,0]},
      "entries":[[{"degree":1,"coeffs":["1","0"]}],[{"degree":2,"coeffs":["1","0","0"]}]]})");
  try {
    subsheaf_from_json(j);
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,0)"), std::string::npos) << e.what();
  }
}

TEST(JsonIoTest, RoundTrips) {
  checks::Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const auto sample = checks::random_nilpotent(rng, checks::CofactorShape::Any);
    EXPECT_EQ(higgs_from_json(Json::parse(higgs_to_json(sample.phi).dump())), sample.phi);
    EXPECT_EQ(subsheaf_from_json(Json::parse(subsheaf_to_json(sample.kernel).dump())), sample.kernel);
    const auto c = canonical_form(sample.phi);
    EXPECT_EQ(canonical_from_json(canonical_to_json(c)), c);
    EXPECT_EQ(divisor_from_json(divisor_to_json(irregularity(sample.phi))), irregularity(sample.phi));
    const auto m = checks::random_module(rng);
    const auto back = module_from_json(Json::parse(module_to_json(m).dump()));
    EXPECT_EQ(back.matrix(), m.matrix());
    const auto p = checks::random_poly(rng, 4);
    EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
  }
}

TEST(JsonIoTest, CensusShape) {
  const auto j = census_to_json(census::nilcone_census({1, 2, std::nullopt}, -1, 1));
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(j["component_families"]["square_root_count"], 4);
  EXPECT_EQ(j["component_families"]["integer_family"]["d_greater_than"], -1);
  EXPECT_EQ(j["components"].size(), 3u);
  EXPECT_TRUE(census_to_json(census::nilcone_census({2, 2, std::nullopt}, 0, 0))["dimension"].is_null());
}
