#include <gtest/gtest.h>

#include "cremona/io.hpp"
#include "cremona/sampling.hpp"
#include "test_support.hpp"

using namespace cremona;
using testing_support::runs;

TEST(Json, IntegersSwitchToStringsPastDoublePrecision) {
  EXPECT_TRUE(io::integer_to_json(Integer(42)).is_number_integer());
  const Integer big = Integer(1) << 80;
  const auto j = io::integer_to_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(io::integer_from_json(j), big);
  EXPECT_EQ(io::integer_from_json(io::integer_to_json(-big)), -big);
  EXPECT_THROW(io::integer_from_json(io::json(1.5)), PreconditionError);
}

TEST(Json, PicClassRoundTrip) {
  sampling::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const auto v = sampling::random_class(rng, static_cast<int>(sampling::uniform(rng, 3, 15)), -1000, 1000);
    EXPECT_EQ(io::pic_class_from_json(io::to_json(v)), v);
    EXPECT_EQ(io::pic_class_from_json(io::json::parse(io::to_json(v).dump())), v);
  }
  const PicClass huge(std::vector<Integer>{Integer("900000000000000000000000"), 1, -2, 3});
  EXPECT_EQ(io::pic_class_from_json(io::to_json(huge)), huge);
  EXPECT_THROW(io::pic_class_from_json(io::json{{"n", 3}, {"coords", {1, 2}}}), PreconditionError);
}

TEST(Json, ReductionRoundTrip) {
  sampling::Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const auto v = sampling::random_K_nonpositive(rng, 10, -9, 9);
    const auto r = reduce(v);
    const auto back = io::reduction_result_from_json(io::json::parse(io::to_json(r).dump()));
    EXPECT_EQ(back.status, r.status);
    EXPECT_EQ(back.reduced, r.reduced);
    EXPECT_EQ(back.witness, r.witness);
    EXPECT_EQ(back.violated, r.violated);
    EXPECT_EQ(back.iterations, r.iterations);
    EXPECT_EQ(apply_word(back.witness, v), back.reduced);
  }
  EXPECT_THROW(io::weyl_word_from_json(io::json::parse(R"([{"tau":1}])")), PreconditionError);
}

TEST(Json, NefVerdictShape) {
  const auto j = io::to_json(is_nef_K_nonpositive(runs(9, {{2, 1}, {-1, 3}})));
  EXPECT_EQ(j["verdict"], "nef");
  EXPECT_EQ(j["method"], "reduction_exact");
  EXPECT_EQ(j["witness"]["word"], io::json::parse(R"([{"phi":[1,2,3]}])"));
  EXPECT_FALSE(j.contains("note"));

  const auto partial = io::to_json(curve_check(runs(12, {{1, 1}}), 3));
  EXPECT_EQ(partial["verdict"], "nef");
  EXPECT_TRUE(partial.contains("note"));

  const auto neg = io::to_json(is_nef_K_nonpositive(PicClass::basis(9, 1)));
  EXPECT_EQ(neg["verdict"], "not_nef");
  EXPECT_FALSE(neg["witness"]["violating"].is_null());
}

TEST(Json, CartanRoundTrip) {
  for (int n : {9, 10, 12, 13}) {
    const auto c = cartan_matrix(build_P_minus(std::max(n, 10)));
    EXPECT_EQ(io::cartan_from_json(io::json::parse(io::to_json(c).dump())), c);
  }
  EXPECT_EQ(io::rational_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(io::rational_from_string("7"), Rational(7));
  EXPECT_EQ(io::rational_from_string("-2/6"), Rational(-1, 3));
  EXPECT_THROW(io::rational_from_string("1/0"), PreconditionError);
}

TEST(Json, MinusOneClass) {
  const auto j = io::to_json(MinusOneClass{runs(6, {{2, 1}, {-1, 5}})});
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["multiplicities"], io::json::parse("[1,1,1,1,1,0]"));
}
