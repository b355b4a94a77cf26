#include <gtest/gtest.h>

#include <set>

#include "cremona/polytopes.hpp"
#include "cremona/sampling.hpp"
#include "oracles/ray_oracle.hpp"
#include "test_support.hpp"

using namespace cremona;
using testing_support::runs;

namespace {

std::set<std::vector<std::int64_t>> library_rays(const ConePolytope& p) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& r : extremal_rays(p)) out.insert(testing_support::to_int64(r.generator));
  return out;
}

std::set<std::vector<std::int64_t>> oracle_rays(const ConePolytope& p) {
  std::vector<oracle::Row> normals;
  for (std::size_t i = 0; i < p.constraint_count(); ++i) normals.push_back(testing_support::to_int64(p.constraint(i).normal));
  return oracle::extremal_rays(normals);
}

}  // namespace

TEST(Builders, Shapes) {
  EXPECT_EQ(build_P_tilde(9).halfspaces.size(), 9u);
  EXPECT_EQ(build_P(9).halfspaces.size(), 10u);
  EXPECT_EQ(build_P_minus(10).halfspaces.size(), 12u);
  EXPECT_EQ(build_P_minus(10).halfspaces.back().normal, anticanonical_class(10));
  EXPECT_EQ(build_P(9).halfspaces[0].normal, runs(9, {{1, 1}, {-1, 3}}));
  EXPECT_EQ(build_P(9).halfspaces[9].normal, PicClass::basis(9, 9));
  EXPECT_FALSE(build_P_tilde(3).notes.empty());
  EXPECT_THROW(build_P_tilde(2), PreconditionError);
  EXPECT_THROW(build_P_minus(9), PreconditionError);
  for (int n = 3; n <= 14; ++n)
    for (const auto& h : build_P(n).halfspaces) EXPECT_LT(square(h.normal), 0);
  EXPECT_THROW(make_cone(3, "bad", {PicClass{1, 0, 0, 0}}), PreconditionError);
}

TEST(Membership, WitnessConstraint) {
  const auto p = build_P_minus(10);
  EXPECT_TRUE(membership(p, PicClass::basis(10, 0)).member);
  const auto m = membership(p, PicClass::basis(10, 10));
  EXPECT_FALSE(m.member);
  ASSERT_TRUE(m.violated_index);
  EXPECT_EQ(*m.violated_index, 10u);
  EXPECT_LT(pairing(*m.violated_normal, PicClass::basis(10, 10)), 0);
  EXPECT_FALSE(membership(p, runs(10, {{1, 1}, {-1, 10}})).member);
  const RationalRay half(std::vector<Rational>{Rational(1, 2), Rational(-1, 2), 0, 0, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_TRUE(membership(p, half).member);
}

TEST(Gram, P9) {
  const auto g = gram_matrix(build_P(9));
  EXPECT_EQ(g[0][0], -2);
  EXPECT_EQ(g[0][3], 1);
  EXPECT_EQ(g[9][9], -1);
  EXPECT_EQ(g[8][9], 1);
  EXPECT_EQ(g[1][5], 0);
}

TEST(Angles, Classification) {
  const auto P = build_P_minus(12);
  const auto& h = P.halfspaces;
  EXPECT_EQ(classify_angle(h[1], h[2]).m, 3);
  EXPECT_EQ(classify_angle(h[1], h[5]).m, 2);
  EXPECT_EQ(classify_angle(h[11], h[12]).m, 4);
  const auto bad = classify_angle(h[12], h[13]);
  EXPECT_EQ(bad.tag, AngleClass::Tag::NonSubmultiple);
  EXPECT_EQ(bad.cos2, Rational(1, 3));
  EXPECT_FALSE(bad.obtuse);
  EXPECT_EQ(classify_angle(build_P_minus(10).halfspaces[10], build_P_minus(10).halfspaces[11]).tag,
            AngleClass::Tag::ZeroAngle);
  EXPECT_EQ(classify_angle(build_P_minus(13).halfspaces[13], build_P_minus(13).halfspaces[14]).m, 3);

  const PicClass u{0, 1, 0};
  const auto divergent = classify_angle(u, PicClass{1, 2, 0});
  EXPECT_EQ(divergent.tag, AngleClass::Tag::Divergent);
  EXPECT_EQ(divergent.cos2, Rational(4, 3));
  const auto obtuse = classify_angle(u, PicClass{0, 1, 1});
  EXPECT_TRUE(obtuse.obtuse);
  EXPECT_EQ(obtuse.tag, AngleClass::Tag::NonSubmultiple);
  EXPECT_EQ(obtuse.describe(), "obtuse");
  EXPECT_EQ(classify_angle(u, PicClass{0, 0, 1}).m, 2);
  EXPECT_THROW(classify_angle(PicClass{1, 0, 0}, u), PreconditionError);
}

TEST(Angles, PiOverSix) {
  const PicClass u{0, 1, 0, 0, 0};
  const PicClass v{0, -3, 1, 1, 1};  // v^2 = -12, u.v = 3, cos2 = 9/12
  const auto a = classify_angle(u, v);
  EXPECT_EQ(a.tag, AngleClass::Tag::PiOver);
  EXPECT_EQ(a.m, 6);
  EXPECT_EQ(a.cos2, Rational(3, 4));
}

TEST(Cartan, RenderTokens) {
  EXPECT_EQ((CartanEntry{-1, Rational(1)}).render(), "2");
  EXPECT_EQ((CartanEntry{0, Rational(0)}).render(), "0");
  EXPECT_EQ((CartanEntry{1, Rational(1, 4)}).render(), "-1");
  EXPECT_EQ((CartanEntry{1, Rational(1, 2)}).render(), "-sqrt(2)");
  EXPECT_EQ((CartanEntry{1, Rational(1, 3)}).render(), "-2/sqrt(3)");
  EXPECT_EQ((CartanEntry{1, Rational(1, 8)}).render(), "-2/sqrt(8)");
  EXPECT_EQ((CartanEntry{1, Rational(1, 1)}).render(), "-2");
  EXPECT_EQ((CartanEntry{1, Rational(3, 4)}).render(), "-sqrt(3)");
  EXPECT_EQ((CartanEntry{1, Rational(4, 3)}).render(), "-4/sqrt(3)");
  EXPECT_EQ((CartanEntry{-1, Rational(1, 4)}).render(), "1");
  EXPECT_EQ((CartanEntry{1, Rational(2, 7)}).render(), "-sqrt(8/7)");
}

TEST(Cartan, PMinusLastEntry) {
  for (int n = 10; n <= 20; ++n) {
    const auto c = cartan_matrix(build_P_minus(n));
    const auto& e = c[static_cast<std::size_t>(n)][static_cast<std::size_t>(n) + 1];
    EXPECT_EQ(e.sign, 1);
    EXPECT_EQ(e.cos2, Rational(1, n - 9));
    EXPECT_EQ(c[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n)].render(), "-sqrt(2)");
  }
  EXPECT_EQ(cartan_matrix(build_P_minus(12))[12][13].render(), "-2/sqrt(3)");
}

TEST(Coxeter, PTildeAndPMinus) {
  for (int n = 3; n <= 15; ++n) EXPECT_TRUE(is_coxeter(build_P_tilde(n)).coxeter);
  for (int n = 3; n <= 15; ++n) EXPECT_TRUE(is_coxeter(build_P(n)).coxeter);
  for (int n = 10; n <= 20; ++n) {
    const auto c = is_coxeter(build_P_minus(n));
    EXPECT_EQ(c.coxeter, n == 10 || n == 11 || n == 13) << n;
  }
}

TEST(Diagram, Conventions) {
  const auto d10 = coxeter_diagram(build_P_minus(10));
  const auto dot = d10.to_dot();
  EXPECT_NE(dot.find("v10 -- v11 [style=dashed];"), std::string::npos);
  EXPECT_NE(dot.find("v9 -- v10;\n  v9 -- v10;"), std::string::npos);  // double edge at pi/4
  EXPECT_NE(d10.to_ascii().find("dashed"), std::string::npos);

  const auto d9 = coxeter_diagram(build_P(9));
  EXPECT_EQ(d9.nodes.size(), 10u);
  EXPECT_EQ(d9.edges.size(), 9u);

  try {
    coxeter_diagram(build_P_minus(12));
    FAIL() << "expected NotCoxeterError";
  } catch (const NotCoxeterError& e) {
    ASSERT_EQ(e.offending.size(), 1u);
    EXPECT_EQ(e.offending[0].i, 12u);
    EXPECT_EQ(e.offending[0].j, 13u);
    EXPECT_EQ(e.offending[0].angle.cos2, Rational(1, 3));
  }

  // Divergent pair: dotted edge.
  const auto toy = make_cone(2, "toy", {PicClass{0, 1, 0}, PicClass{1, 2, 0}});
  const auto dt = coxeter_diagram(toy);
  ASSERT_EQ(dt.edges.size(), 1u);
  EXPECT_EQ(dt.edges[0].style, DiagramEdge::Style::Dotted);
  EXPECT_NE(dt.to_dot().find("style=dotted"), std::string::npos);
}

TEST(Rays, P9) {
  const auto rays = extremal_rays(build_P(9));
  ASSERT_EQ(rays.size(), 10u);
  std::size_t boundary = 0;
  for (const auto& r : rays) {
    EXPECT_EQ(r.active_set.size(), 9u) << r.generator;
    boundary += r.position.tag == LightConePosition::Tag::Boundary;
    EXPECT_TRUE(r.position.forward);
  }
  EXPECT_EQ(boundary, 2u);
  EXPECT_TRUE(finite_volume(build_P(9)));
}

TEST(Rays, AgreeWithCrossProductOracle) {
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(library_rays(build_P(n)), oracle_rays(build_P(n))) << n;
  for (int n = 10; n <= 13; ++n) {
    EXPECT_EQ(library_rays(build_P(n)), oracle_rays(build_P(n))) << n;
    EXPECT_EQ(library_rays(build_P_minus(n)), oracle_rays(build_P_minus(n))) << n;
  }
}

TEST(Rays, RandomToyConesAgreeWithOracle) {
  sampling::Rng rng(21);
  int tested = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(sampling::uniform(rng, 1, 3));
    const int m = static_cast<int>(sampling::uniform(rng, n + 1, n + 5));
    std::vector<PicClass> normals;
    for (int i = 0; i < m; ++i) {
      auto u = sampling::random_class(rng, n, -3, 3);
      if (!u.is_zero()) normals.push_back(u);
    }
    const auto p = make_cone(n, "toy", {}, normals);
    std::vector<oracle::Row> rows;
    for (const auto& u : normals) rows.push_back(testing_support::to_int64(u));
    try {
      const auto mine = library_rays(p);
      EXPECT_EQ(mine, oracle::extremal_rays(rows));
      ++tested;
    } catch (const PreconditionError&) {
      // not pointed; the oracle has no opinion
    }
  }
  EXPECT_GT(tested, 50);
}

TEST(Rays, NonPointedThrows) { EXPECT_THROW(extremal_rays(build_P_tilde(9)), PreconditionError); }

TEST(Rays, InfiniteVolumeOfP10) {
  const auto rays = extremal_rays(build_P(10));
  EXPECT_FALSE(finite_volume(rays));
  bool found = false;
  for (const auto& r : rays) found = found || r.generator == runs(10, {{3, 1}, {-1, 10}});
  EXPECT_TRUE(found);
}

TEST(Rays, PMinusFamilies) {
  for (int n = 10; n <= 16; ++n) {
    const auto rep = verify_vertex_formulas(n);
    EXPECT_TRUE(rep.ok()) << n;
    EXPECT_EQ(rep.enumerated_rays.size(), static_cast<std::size_t>(9 * n - 71));
    const auto b = boundary_rays(build_P_minus(n));
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[0].generator, runs(n, {{1, 1}, {-1, 1}}));
    EXPECT_EQ(b[1].generator, runs(n, {{3, 1}, {-1, 9}}));
    EXPECT_TRUE(finite_volume(build_P_minus(n)));
  }
}

TEST(Rays, MemberWithEqualityOnAnticanonicalFacet) {
  for (int n = 10; n <= 14; ++n) {
    const auto v = runs(n, {{n, 1}, {-3, n}});
    EXPECT_EQ(pairing(anticanonical_class(n), v), 0);
    EXPECT_TRUE(membership(build_P_minus(n), v).member);
  }
}

TEST(Rays, MinimalDescriptions) {
  EXPECT_TRUE(minimality_audit(build_P(9)).empty());
  for (int n = 10; n <= 13; ++n) EXPECT_TRUE(minimality_audit(build_P_minus(n)).empty()) << n;
  auto p = build_P(9);
  p.halfspaces.push_back({PicClass::basis(9, 0), "redundant"});
  const auto red = minimality_audit(p);
  ASSERT_EQ(red.size(), 1u);
  EXPECT_EQ(red[0], 10u);
}

TEST(RegionR, Tables) {
  const auto r10 = verify_region_R(10);
  EXPECT_EQ(r10.rows.size(), 10u);
  EXPECT_EQ(r10.max_f, 1);
  EXPECT_TRUE(r10.f_at_most_1 && r10.f_below_1_when_xn_negative && r10.max_only_with_xn_zero);
  const std::array<Rational, 3> third{Rational(-1, 3), Rational(-1, 3), Rational(0)};
  EXPECT_EQ(std::count_if(r10.rows.begin(), r10.rows.end(), [&](const RegionRRow& r) { return r.is_vertex && *r.point == third; }), 4);

  const auto r12 = verify_region_R(12);
  EXPECT_EQ(std::count_if(r12.rows.begin(), r12.rows.end(), [](const RegionRRow& r) { return r.is_vertex; }), 6);
  for (const auto& row : r12.rows) {
    if (row.is_vertex && *row.point == std::array<Rational, 3>{Rational(-1, 4), Rational(-1, 4), Rational(-1, 4)}) {
      EXPECT_EQ(*row.f, Rational(3, 4));
    }
  }
  for (int n = 10; n <= 40; ++n) {
    const auto r = verify_region_R(n);
    EXPECT_TRUE(r.f_at_most_1 && r.f_below_1_when_xn_negative) << n;
  }
  EXPECT_THROW(verify_region_R(9), PreconditionError);
}
