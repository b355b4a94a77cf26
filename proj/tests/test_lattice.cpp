#include <gtest/gtest.h>

#include "cremona/lattice.hpp"
#include "cremona/sampling.hpp"
#include "test_support.hpp"

using namespace cremona;

TEST(Pairing, BasisValues) {
  const int n = 9;
  EXPECT_EQ(pairing(PicClass::basis(n, 0), PicClass::basis(n, 0)), 1);
  for (int i = 1; i <= n; ++i) {
    EXPECT_EQ(square(PicClass::basis(n, i)), -1);
    EXPECT_EQ(pairing(PicClass::basis(n, 0), PicClass::basis(n, i)), 0);
  }
  EXPECT_EQ(pairing(PicClass::basis(n, 1), PicClass::basis(n, 2)), 0);
}

TEST(Pairing, CanonicalClass) {
  for (int n = 3; n <= 14; ++n) {
    const auto K = canonical_class(n);
    EXPECT_EQ(square(K), 9 - n);
    EXPECT_EQ(pairing(K, PicClass::basis(n, 0)), -3);
    for (int i = 1; i <= n; ++i) EXPECT_EQ(pairing(K, PicClass::basis(n, i)), -1);
    EXPECT_EQ(anticanonical_class(n), -K);
  }
  EXPECT_EQ(canonical_class(9), (PicClass{-3, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(canonical_class(2), PreconditionError);
}

TEST(Pairing, DimensionMismatchThrows) {
  EXPECT_THROW(pairing(PicClass::zero(3), PicClass::zero(4)), PreconditionError);
}

TEST(Pairing, BigIntegersAreExact) {
  const Integer big("123456789012345678901234567890");
  const PicClass u(std::vector<Integer>{big, big, 0, 0});
  const PicClass v(std::vector<Integer>{big, 0, big, 0});
  EXPECT_EQ(pairing(u, v), big * big);
  EXPECT_EQ(square(u), 0);
}

TEST(Pairing, SymmetricAndBilinear) {
  sampling::Rng rng(1);
  for (int t = 0; t < 500; ++t) {
    const int n = static_cast<int>(sampling::uniform(rng, 3, 14));
    const auto a = sampling::random_class(rng, n, -30, 30);
    const auto b = sampling::random_class(rng, n, -30, 30);
    const auto c = sampling::random_class(rng, n, -30, 30);
    const Integer k = sampling::uniform(rng, -7, 7);
    EXPECT_EQ(pairing(a, b), pairing(b, a));
    EXPECT_EQ(pairing(a + k * b, c), pairing(a, c) + k * pairing(b, c));
  }
}

TEST(LightCone, Positions) {
  const int n = 9;
  auto e0 = light_cone_position(PicClass::basis(n, 0));
  EXPECT_EQ(e0.tag, LightConePosition::Tag::Interior);
  EXPECT_TRUE(e0.forward);
  auto back = light_cone_position(-PicClass::basis(n, 0));
  EXPECT_EQ(back.tag, LightConePosition::Tag::Interior);
  EXPECT_FALSE(back.forward);
  EXPECT_EQ(light_cone_position(testing_support::runs(n, {{1, 1}, {-1, 1}})).tag, LightConePosition::Tag::Boundary);
  EXPECT_EQ(light_cone_position(anticanonical_class(9)).tag, LightConePosition::Tag::Boundary);
  EXPECT_EQ(light_cone_position(anticanonical_class(10)).tag, LightConePosition::Tag::Outside);
  EXPECT_EQ(light_cone_position(PicClass::basis(n, 3)).tag, LightConePosition::Tag::Outside);
  EXPECT_THROW(light_cone_position(PicClass::zero(n)), PreconditionError);
  EXPECT_STREQ(to_string(LightConePosition::Tag::Boundary), "boundary");
}

TEST(Primitive, Integers) {
  EXPECT_EQ(primitive(PicClass{2, -2, 0}), (PicClass{1, -1, 0}));
  EXPECT_EQ(primitive(PicClass{-6, 3, 9}), (PicClass{2, -1, -3}));
  EXPECT_EQ(primitive(PicClass{0, -2, 4}), (PicClass{0, 1, -2}));
  EXPECT_THROW(primitive(PicClass::zero(3)), PreconditionError);
}

TEST(Primitive, RationalRay) {
  const RationalRay r(std::vector<Rational>{Rational(1, 2), Rational(-1, 3), 0});
  EXPECT_EQ(primitive(r), (PicClass{3, -2, 0}));
  const RationalRay s(std::vector<Rational>{Rational(-3, 4), Rational(3, 2), Rational(0)});
  EXPECT_EQ(primitive(s), (PicClass{1, -2, 0}));
  EXPECT_THROW(RationalRay(std::vector<Rational>{0, 0, 0}), PreconditionError);
}

TEST(Primitive, ContentIsOneProperty) {
  sampling::Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    auto v = sampling::random_class(rng, 5, -40, 40);
    if (v.is_zero()) continue;
    const auto p = primitive(v);
    std::vector<Integer> c = p.vector();
    EXPECT_EQ(detail::gcd_of(c), 1);
    // v is a nonzero multiple of p
    bool parallel = true;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) parallel = parallel && v[i] * p[j] == v[j] * p[i];
    EXPECT_TRUE(parallel) << v;
  }
}

TEST(PicClassType, OrderingAndFormatting) {
  EXPECT_LT((PicClass{1, -1, 0}), (PicClass{1, 0, 0}));
  EXPECT_LT((PicClass{5, 0}), (PicClass{0, 0, 0}));  // rank first
  EXPECT_EQ((PicClass{3, -1, 0}).to_string(), "(3,-1,0)");
  EXPECT_EQ((PicClass{3, -1, 0}).with(2, 4), (PicClass{3, -1, 4}));
  EXPECT_EQ((PicClass{3, -1, 0}).degree(), 3);
  EXPECT_THROW(PicClass(std::vector<Integer>{1}), PreconditionError);
}

TEST(Parsing, Vectors) {
  EXPECT_EQ(parse_pic_class(" 2, -1 ,-1,+0 "), (PicClass{2, -1, -1, 0}));
  EXPECT_EQ(parse_pic_class("1,0,0,0", 3), (PicClass{1, 0, 0, 0}));
  EXPECT_THROW(parse_pic_class("1,0,0", 3), PreconditionError);
  EXPECT_THROW(parse_pic_class("1,x,0"), PreconditionError);
  EXPECT_THROW(parse_pic_class("1,,0"), PreconditionError);
  EXPECT_THROW(parse_pic_class("1,-"), PreconditionError);
  EXPECT_EQ(parse_integer("-99999999999999999999999"), Integer("-99999999999999999999999"));
}
