#include <gtest/gtest.h>

#include "cremona/curves.hpp"
#include "cremona/nef.hpp"
#include "cremona/sampling.hpp"
#include "test_support.hpp"

using namespace cremona;
using testing_support::runs;

TEST(FundamentalCone, Shapes) {
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(fundamental_cone(n).halfspaces.size(), static_cast<std::size_t>(n) + 1);
  for (int n = 10; n <= 16; ++n) EXPECT_EQ(fundamental_cone(n).halfspaces.size(), static_cast<std::size_t>(n) + 2);
  EXPECT_EQ(fundamental_cone(12).name, "fundamental");
  EXPECT_THROW(fundamental_cone(2), PreconditionError);
}

TEST(NefByReduction, Examples) {
  const auto line = is_nef_K_nonpositive(runs(9, {{1, 1}}));
  EXPECT_TRUE(line.nef);
  EXPECT_TRUE(line.conclusive());
  EXPECT_EQ(line.method.to_string(), "reduction_exact");

  const auto cubic = is_nef_K_nonpositive(runs(9, {{2, 1}, {-1, 3}}));
  EXPECT_TRUE(cubic.nef);
  ASSERT_TRUE(cubic.word);
  EXPECT_EQ(cubic.word->to_string(), "[phi(1,2,3)]");

  const auto e1 = is_nef_K_nonpositive(PicClass::basis(9, 1));
  EXPECT_FALSE(e1.nef);
  ASSERT_TRUE(e1.violating);
  EXPECT_EQ(pairing(PicClass::basis(9, 1), *e1.violating), -1);

  EXPECT_TRUE(is_nef_K_nonpositive(PicClass::zero(9)).nef);
  EXPECT_TRUE(is_nef_K_nonpositive(anticanonical_class(9)).nef);
  EXPECT_THROW(is_nef_K_nonpositive(anticanonical_class(10)), PreconditionError);  // K^2 < 0
  EXPECT_THROW(is_nef_K_nonpositive(-PicClass::basis(9, 1)), PreconditionError);
  EXPECT_THROW(is_nef_K_nonpositive(PicClass{1, 0}), PreconditionError);
}

TEST(NefByReduction, WitnessesReverify) {
  sampling::Rng rng(31);
  for (int n : {4, 7, 9, 10, 11, 13}) {
    for (int t = 0; t < 150; ++t) {
      const auto v = sampling::random_K_nonpositive(rng, n, -12, 12);
      const auto verdict = is_nef_K_nonpositive(v);
      ASSERT_TRUE(verdict.word && verdict.reduced);
      EXPECT_EQ(apply_word(*verdict.word, v), *verdict.reduced);
      if (verdict.nef) {
        EXPECT_TRUE(membership(fundamental_cone(n), *verdict.reduced).member);
        EXPECT_GE(square(v), 0);
      } else {
        ASSERT_TRUE(verdict.violating);
        EXPECT_LT(pairing(v, *verdict.violating), 0);
      }
    }
  }
}

TEST(CurveCheck, Examples) {
  const auto e1 = curve_check(PicClass::basis(9, 1), 3);
  EXPECT_FALSE(e1.nef);
  EXPECT_EQ(*e1.violating, PicClass::basis(9, 1));

  const auto neg_line = curve_check(PicClass{1, 0, 0, 2}, 3);
  EXPECT_FALSE(neg_line.nef);

  const auto small = curve_check(runs(10, {{3, 1}, {-1, 10}}), 4);
  EXPECT_FALSE(small.nef);
  EXPECT_EQ(small.reason, "self_intersection");

  const auto pass = curve_check(runs(12, {{1, 1}}), 5);
  EXPECT_TRUE(pass.nef);
  EXPECT_FALSE(pass.conclusive());
  EXPECT_EQ(pass.method.to_string(), "curve_check_up_to_degree(5)");
  EXPECT_THROW(curve_check(runs(9, {{1, 1}}), curve_table(10, 2)), PreconditionError);
}

TEST(CurveCheck, ExactForDelPezzo) {
  // Up to eight points the (-1)-classes of degree <= 6 span the effective cone.
  sampling::Rng rng(32);
  for (int n = 3; n <= 8; ++n) {
    const auto table = curve_table(n, 6);
    for (int t = 0; t < 300; ++t) {
      const auto v = sampling::random_K_nonpositive(rng, n, -8, 8);
      EXPECT_EQ(curve_check(v, table).nef, is_nef_K_nonpositive(v).nef) << v;
    }
  }
}

TEST(CurveCheck, SoundAgainstReduction) {
  sampling::Rng rng(33);
  for (int n : {9, 10, 12}) {
    const auto table = curve_table(n, 5);
    const auto rays = extremal_rays(fundamental_cone(n));
    const auto gens = all_generators(n);
    for (int t = 0; t < 200; ++t) {
      const auto v = t % 2 ? sampling::random_K_nonpositive(rng, n, -10, 10)
                           : apply_word(sampling::random_word(rng, gens, 8), sampling::random_sparse_cone_point(rng, rays, n, 2));
      const auto exact = is_nef_K_nonpositive(v);
      const auto cc = curve_check(v, table);
      if (exact.nef) {
        EXPECT_TRUE(cc.nef) << v;
      }
      if (!cc.nef) {
        EXPECT_FALSE(exact.nef) << v;
        EXPECT_LT(pairing(v, *cc.violating), 0);
      }
    }
  }
}

TEST(NefByReduction, OrbitOfConeRaysIsNef) {
  sampling::Rng rng(34);
  const auto gens = all_generators(9);
  for (const auto& seed : {runs(9, {{1, 1}, {-1, 1}}), anticanonical_class(9)}) {
    for (int t = 0; t < 100; ++t) {
      const auto w = sampling::random_word(rng, gens, 20);
      const auto v = apply_word(w, seed);
      const auto verdict = is_nef_K_nonpositive(v);
      EXPECT_TRUE(verdict.nef) << v;
      EXPECT_EQ(*verdict.reduced, seed);
    }
  }
}
