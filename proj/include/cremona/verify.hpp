#pragma once

// Acceptance suite.  Each check recomputes a published quantity from scratch
// and compares it with a frozen reference in Fixtures; the randomized checks
// are driven by a single seed.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cremona/curves.hpp"
#include "cremona/io.hpp"
#include "cremona/lattice.hpp"
#include "cremona/nef.hpp"
#include "cremona/polytopes.hpp"
#include "cremona/sampling.hpp"
#include "cremona/weyl.hpp"

namespace cremona::verify {

// ---------------------------------------------------------------------------
// Edge-labeled graphs and isomorphism, for comparing Coxeter diagrams.

inline constexpr int kDashed = -1;
inline constexpr int kDotted = -2;

/// Simple graph with integer edge labels: k >= 1 for k parallel edges,
/// kDashed, kDotted.
struct LabeledGraph {
  std::size_t nodes = 0;
  std::map<std::pair<std::size_t, std::size_t>, int> edges;

  void add(std::size_t a, std::size_t b, int label) {
    require(a != b && a < nodes && b < nodes, "LabeledGraph: bad edge");
    edges[{std::min(a, b), std::max(a, b)}] = label;
  }

  int label(std::size_t a, std::size_t b) const {
    auto it = edges.find({std::min(a, b), std::max(a, b)});
    return it == edges.end() ? 0 : it->second;
  }

  bool has_label(int l) const {
    return std::any_of(edges.begin(), edges.end(), [l](const auto& e) { return e.second == l; });
  }

  std::vector<int> incident(std::size_t v) const {
    std::vector<int> out;
    for (const auto& [key, l] : edges)
      if (key.first == v || key.second == v) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string describe() const {
    std::map<int, int> count;
    for (const auto& e : edges) ++count[e.second];
    std::string out = std::to_string(nodes) + " nodes;";
    for (const auto& [l, c] : count) {
      out += " " + std::to_string(c) + "x";
      out += l == kDashed ? std::string("dashed") : l == kDotted ? std::string("dotted") : std::to_string(l) + "-fold";
    }
    return out;
  }
};

inline LabeledGraph graph_of(const CoxeterDiagram& d) {
  LabeledGraph g;
  g.nodes = d.nodes.size();
  for (const auto& e : d.edges) {
    const int l = e.style == DiagramEdge::Style::Dashed   ? kDashed
                  : e.style == DiagramEdge::Style::Dotted ? kDotted
                                                          : e.multiplicity;
    g.add(e.a, e.b, l);
  }
  return g;
}

/// Backtracking isomorphism test; nodes are matched by their sorted list of
/// incident labels first.
inline bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.nodes != b.nodes || a.edges.size() != b.edges.size()) return false;
  std::vector<std::vector<int>> sa(a.nodes), sb(b.nodes);
  for (std::size_t v = 0; v < a.nodes; ++v) sa[v] = a.incident(v), sb[v] = b.incident(v);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<std::size_t> order(a.nodes);
  for (std::size_t v = 0; v < a.nodes; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sa[x].size() > sa[y].size(); });
  std::vector<std::size_t> map(a.nodes, a.nodes);
  std::vector<bool> used(b.nodes, false);
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < b.nodes; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < depth && ok; ++t) ok = a.label(v, order[t]) == b.label(w, map[order[t]]);
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

// ---------------------------------------------------------------------------
// Frozen reference data.

struct RegionRRowRef {
  std::array<Rational, 3> point;
  bool vertex = false;
  std::optional<Rational> f;

  friend bool operator==(const RegionRRowRef&, const RegionRRowRef&) = default;
  friend bool operator<(const RegionRRowRef& a, const RegionRRowRef& b) {
    return std::tie(a.point, a.vertex, a.f) < std::tie(b.point, b.vertex, b.f);
  }
};

struct Fixtures {
  CartanMatrix cartan_P9;
  std::vector<PicClass> rays_P9;
  std::vector<PicClass> boundary_P9;
  LabeledGraph diagram_P9;
  std::map<int, LabeledGraph> drawn_P_minus;  // n = 10, 11, 13 as drawn
  std::map<int, std::vector<RegionRRowRef>> region_R;  // n = 10, 12
  std::map<int, long> minus_one_totals;                 // n = 3..8
};

namespace detail {

inline CartanEntry cartan_token(const std::string& t) {
  if (t == "2") return {-1, Rational(1)};
  if (t == "0") return {0, Rational(0)};
  if (t == "-1") return {1, Rational(1, 4)};
  if (t == "-r2") return {1, Rational(1, 2)};
  throw std::logic_error("unknown Cartan token " + t);
}

inline PicClass run_class(int n, std::initializer_list<std::pair<long long, int>> runs) {
  std::vector<Integer> x;
  for (const auto& [v, c] : runs)
    for (int k = 0; k < c; ++k) x.emplace_back(v);
  x.resize(static_cast<std::size_t>(n) + 1);
  return PicClass(std::move(x));
}

/// Path 1-2-...-k of single edges, the given closing edge between k and k+1,
/// and a branch node attached to node 3 (nodes numbered from 1).
inline LabeledGraph branched_path(std::size_t path_nodes, int closing_label) {
  LabeledGraph g;
  g.nodes = path_nodes + 2;
  for (std::size_t v = 0; v + 1 < path_nodes; ++v) g.add(v, v + 1, 1);
  g.add(path_nodes - 1, path_nodes, closing_label);
  g.add(2, path_nodes + 1, 1);
  return g;
}

}  // namespace detail

/// Region R table as a function of n (vertex flags and f where a vertex).
inline std::vector<RegionRRowRef> region_R_table(int n) {
  const Rational N(n);
  const Rational third(1, 3);
  auto row = [](Rational a, Rational b, Rational c, bool vertex, std::optional<Rational> f) {
    return RegionRRowRef{{a, b, c}, vertex, vertex ? f : std::nullopt};
  };
  return {
      row(0, 0, 0, true, Rational(0)),
      row(-1, 0, 0, true, Rational(1)),
      row(-3, 0, 0, false, std::nullopt),
      row(-third, -third, 0, n == 10, Rational(1)),
      row(-3 / (N - 1), -3 / (N - 1), 0, true, 9 / (N - 1)),
      row(-third, -third, -third, false, std::nullopt),
      row(-3 / N, -3 / N, -3 / N, true, 9 / N),
      row(-third, -third, (N - 10) / 3, n == 10, Rational(1)),
      row(-(N - 7) / (N - 3), -2 / (N - 3), -2 / (N - 3), true, ((N - 7) * (N - 7) + 4 * (N - 1)) / ((N - 3) * (N - 3))),
      row(-(N - 8) / (N - 4), -2 / (N - 4), 0, true, ((N - 8) * (N - 8) + 4 * (N - 2)) / ((N - 4) * (N - 4))),
  };
}

inline Fixtures reference_fixtures() {
  Fixtures fx;
  const std::vector<std::vector<std::string>> c9{
      {"2", "0", "0", "-1", "0", "0", "0", "0", "0", "0"},
      {"0", "2", "-1", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "-1", "2", "-1", "0", "0", "0", "0", "0", "0"},
      {"-1", "0", "-1", "2", "-1", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "-1", "2", "-1", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "-1", "2", "-1", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "-1", "2", "-1", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "-1", "2", "-1", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "-1", "2", "-r2"},
      {"0", "0", "0", "0", "0", "0", "0", "0", "-r2", "2"},
  };
  for (const auto& row : c9) {
    fx.cartan_P9.emplace_back();
    for (const auto& t : row) fx.cartan_P9.back().push_back(detail::cartan_token(t));
  }

  using detail::run_class;
  fx.rays_P9 = {run_class(9, {{1, 1}}), run_class(9, {{2, 1}, {-1, 2}})};
  for (int k = 3; k <= 8; ++k) fx.rays_P9.push_back(run_class(9, {{3, 1}, {-1, k}}));
  fx.rays_P9.push_back(run_class(9, {{1, 1}, {-1, 1}}));
  fx.rays_P9.push_back(run_class(9, {{3, 1}, {-1, 9}}));
  fx.boundary_P9 = {run_class(9, {{1, 1}, {-1, 1}}), run_class(9, {{3, 1}, {-1, 9}})};

  // Drawn diagrams: a path with the closing edge at its end and a branch at
  // the third node.
  fx.diagram_P9 = detail::branched_path(8, 2);
  fx.drawn_P_minus[10] = detail::branched_path(9, kDashed);
  fx.drawn_P_minus[11] = detail::branched_path(10, 3);
  fx.drawn_P_minus[13] = detail::branched_path(12, 2);

  fx.region_R[10] = region_R_table(10);
  fx.region_R[12] = region_R_table(12);

  fx.minus_one_totals = {{3, 6}, {4, 10}, {5, 16}, {6, 27}, {7, 56}, {8, 240}};
  return fx;
}

// ---------------------------------------------------------------------------
// Report.

struct CheckResult {
  std::string id;
  std::string title;
  std::string anchor;
  bool pass = false;
  std::string expected;
  std::string computed;
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
  }

  std::string text() const {
    std::ostringstream out;
    for (const auto& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << "criterion_" << c.id << "  " << c.title;
      out << "  [" << std::fixed;
      out.precision(2);
      out << c.seconds << "s]\n";
      if (!c.pass) {
        out << "    expected: " << c.expected << "\n";
        out << "    computed: " << c.computed << "\n";
      }
    }
    out << (all_passed() ? "all " : "") << checks.size() - failures() << "/" << checks.size() << " checks passed\n";
    return out.str();
  }

  nlohmann::json json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
      arr.push_back({{"id", c.id},
                     {"title", c.title},
                     {"status", c.pass ? "pass" : "fail"},
                     {"expected", c.expected},
                     {"computed", c.computed},
                     {"anchor", c.anchor},
                     {"seconds", c.seconds}});
    return {{"suite", suite}, {"seed", seed}, {"passed", all_passed()}, {"checks", arr}};
  }
};

struct VerifyOptions {
  bool quick = false;
  std::uint64_t seed = 20240917;
  std::optional<std::pair<int, int>> n_range;  // overrides the n sweep of criterion 04
  std::vector<std::string> only;              // check ids; empty runs all
  Fixtures fixtures = reference_fixtures();
};

// ---------------------------------------------------------------------------
// Checks.

namespace detail {

inline std::string join(const std::vector<PicClass>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + "}";
}

inline std::vector<PicClass> generators_of(const std::vector<Ray>& rays) {
  std::vector<PicClass> out;
  for (const auto& r : rays) out.push_back(r.generator);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<PicClass> sorted(std::vector<PicClass> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::string point_string(const std::array<Rational, 3>& p) {
  return "(" + p[0].str() + "," + p[1].str() + "," + p[2].str() + ")";
}

inline std::string rows_string(const std::vector<RegionRRowRef>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += point_string(r.point) + (r.vertex ? ":yes" : ":no");
    if (r.f) out += ":f=" + r.f->str();
    out += " ";
  }
  return out;
}

}  // namespace detail

struct Context {
  const VerifyOptions& options;
  std::uint64_t seed_for(int salt) const { return options.seed * 1000003ULL + static_cast<std::uint64_t>(salt); }
};

inline CheckResult check_01(const Context& ctx) {
  CheckResult r{"01", "Cartan matrix of P_9 (entries 2, 0, -1, -sqrt(2))", "P_9 Cartan matrix display", false, "", "", 0};
  const auto computed = cartan_matrix(build_P(9));
  const auto& expected = ctx.options.fixtures.cartan_P9;
  r.expected = render_cartan(expected);
  r.computed = render_cartan(computed);
  r.pass = computed == expected;
  if (!r.pass && computed.size() == expected.size()) {
    std::string diff;
    for (std::size_t i = 0; i < computed.size(); ++i)
      for (std::size_t j = 0; j < computed[i].size() && j < expected[i].size(); ++j)
        if (!(computed[i][j] == expected[i][j]))
          diff += " (" + std::to_string(i) + "," + std::to_string(j) + "): expected " + expected[i][j].render() +
                  " got " + computed[i][j].render() + ";";
    r.computed = "entry mismatches:" + diff;
  }
  return r;
}

inline CheckResult check_02(const Context&) {
  CheckResult r{"02", "P~_n for n = 9..13 is Coxeter with entries in {2, 0, -1}", "Cartan entries of P~_n", true,
                "n=9..13: coxeter, tokens {2,0,-1}", "", 0};
  for (int n = 9; n <= 13; ++n) {
    const auto p = build_P_tilde(n);
    std::set<std::string> tokens;
    for (const auto& row : cartan_matrix(p))
      for (const auto& e : row) tokens.insert(e.render());
    const bool cox = is_coxeter(p).coxeter;
    const bool ok = cox && std::all_of(tokens.begin(), tokens.end(),
                                       [](const std::string& t) { return t == "2" || t == "0" || t == "-1"; });
    std::string ts;
    for (const auto& t : tokens) ts += t + " ";
    r.computed += "n=" + std::to_string(n) + ": coxeter=" + (cox ? "yes" : "no") + " tokens {" + ts + "} ";
    r.pass = r.pass && ok;
  }
  return r;
}

inline CheckResult check_03(const Context& ctx) {
  CheckResult r{"03", "extremal rays of P_9: the 10 listed vertices, 2 on the light cone", "P_9 vertex list", false,
                "", "", 0};
  const auto rays = extremal_rays(build_P(9));
  const auto got = detail::generators_of(rays);
  const auto boundary = detail::generators_of(boundary_rays(build_P(9)));
  const auto want = detail::sorted(ctx.options.fixtures.rays_P9);
  const auto want_boundary = detail::sorted(ctx.options.fixtures.boundary_P9);
  r.expected = "rays " + detail::join(want) + "; boundary " + detail::join(want_boundary);
  r.computed = "rays " + detail::join(got) + "; boundary " + detail::join(boundary);
  r.pass = got == want && boundary == want_boundary && got.size() == 10;
  return r;
}

inline CheckResult check_04(const Context& ctx) {
  const auto [lo, hi] = ctx.options.n_range.value_or(std::pair{10, ctx.options.quick ? 11 : 14});
  CheckResult r{"04",
                "P^-_n for n = " + std::to_string(lo) + ".." + std::to_string(hi) +
                    ": 9n-71 rays equal to the families, 2 boundary rays, finite volume",
                "P^-_n vertex families", true, "", "", 0};
  for (int n = lo; n <= hi; ++n) {
    const auto rep = verify_vertex_formulas(n);
    const auto rays = extremal_rays(build_P_minus(n));
    const auto boundary = detail::generators_of(boundary_rays(build_P_minus(n)));
    const auto want_boundary =
        detail::sorted({detail::run_class(n, {{1, 1}, {-1, 1}}), detail::run_class(n, {{3, 1}, {-1, 9}})});
    const bool fv = finite_volume(rays);
    const bool ok = rep.ok() && boundary == want_boundary && fv;
    r.expected += "n=" + std::to_string(n) + ": " + std::to_string(rep.expected_count) + " rays, boundary " +
                  detail::join(want_boundary) + ", finite; ";
    r.computed += "n=" + std::to_string(n) + ": " + std::to_string(rep.enumerated_rays.size()) + " rays (" +
                  std::to_string(rep.missing.size()) + " missing, " + std::to_string(rep.extra.size()) +
                  " extra), boundary " + detail::join(boundary) + ", " + (fv ? "finite" : "infinite") + "; ";
    r.pass = r.pass && ok;
  }
  return r;
}

inline CheckResult check_05(const Context&) {
  CheckResult r{"05", "P_10 has infinite volume (a ray outside the light cone)", "P_n infinite volume for n >= 10",
                false, "finite_volume(P_10) = false", "", 0};
  const auto rays = extremal_rays(build_P(10));
  std::vector<PicClass> outside;
  for (const auto& ray : rays)
    if (ray.position.tag == LightConePosition::Tag::Outside) outside.push_back(ray.generator);
  const bool fv = finite_volume(rays);
  r.computed = std::string("finite_volume(P_10) = ") + (fv ? "true" : "false") + "; outside rays " + detail::join(outside);
  r.pass = !fv && !outside.empty();
  return r;
}

inline CheckResult check_06(const Context&) {
  CheckResult r{"06", "P^-_n is Coxeter exactly for n in {10, 11, 13} (n = 10..20), offending cos^2 = 1/(n-9)",
                "Coxeter criterion for P^-_n", true, "coxeter for n in {10,11,13}; otherwise pair (v_n, v_{n+1}) with cos2 = 1/(n-9)",
                "", 0};
  std::string coxeter_ns;
  for (int n = 10; n <= 20; ++n) {
    const auto p = build_P_minus(n);
    const auto check = is_coxeter(p);
    const Rational want(1, n - 9);
    const auto a = classify_angle(p.halfspaces[static_cast<std::size_t>(n)], p.halfspaces[static_cast<std::size_t>(n) + 1]);
    const bool expect_cox = n == 10 || n == 11 || n == 13;
    bool ok = check.coxeter == expect_cox && a.cos2 == want;
    if (!check.coxeter) {
      ok = ok && check.offending.size() == 1 && check.offending[0].i == static_cast<std::size_t>(n) &&
           check.offending[0].j == static_cast<std::size_t>(n) + 1 && check.offending[0].angle.cos2 == want;
      r.computed += "n=" + std::to_string(n) + ": " + std::to_string(check.offending.size()) + " offending, cos2 " +
                    (check.offending.empty() ? std::string("-") : check.offending[0].angle.cos2.str()) + "; ";
    } else {
      coxeter_ns += std::to_string(n) + " ";
    }
    r.pass = r.pass && ok;
  }
  r.computed = "coxeter for n = " + coxeter_ns + "; " + r.computed;
  return r;
}

inline CheckResult check_07a(const Context& ctx) {
  CheckResult r{"07a", "Coxeter diagram of P_9 matches the drawn diagram up to isomorphism", "P_9 Coxeter diagram",
                false, "", "", 0};
  const auto g = graph_of(coxeter_diagram(build_P(9)));
  r.expected = ctx.options.fixtures.diagram_P9.describe();
  r.computed = g.describe();
  r.pass = isomorphic(g, ctx.options.fixtures.diagram_P9);
  return r;
}

namespace detail {

inline CheckResult diagram_feature(const Context& ctx, std::string id, int n, int label, const std::string& feature) {
  CheckResult r{std::move(id), "Coxeter diagram of P^-_" + std::to_string(n) + " has a " + feature,
                "P^-_n Coxeter diagrams", false, "", "", 0};
  const auto g = graph_of(coxeter_diagram(build_P_minus(n)));
  const auto& drawn = ctx.options.fixtures.drawn_P_minus.at(n);
  r.expected = feature + " (drawn: " + drawn.describe() + ")";
  r.computed = g.describe() + "; isomorphic to drawing: " + (isomorphic(g, drawn) ? "yes" : "no");
  r.pass = g.has_label(label);
  return r;
}

}  // namespace detail

inline CheckResult check_07b(const Context& ctx) { return detail::diagram_feature(ctx, "07b", 10, kDashed, "dashed edge"); }
inline CheckResult check_07c(const Context& ctx) { return detail::diagram_feature(ctx, "07c", 11, 3, "triple edge"); }
inline CheckResult check_07d(const Context& ctx) { return detail::diagram_feature(ctx, "07d", 13, 2, "double edge"); }

inline CheckResult check_08(const Context& ctx) {
  CheckResult r{"08", "region R vertex table for n = 10 and n = 12, max f = 1 only with x_n = 0",
                "region R vertex table", true, "", "", 0};
  for (const auto& [n, want_rows] : ctx.options.fixtures.region_R) {
    const auto rep = verify_region_R(n);
    std::vector<RegionRRowRef> got;
    for (const auto& row : rep.rows) {
      require(row.point.has_value(), "region R: three facet planes without a common point");
      got.push_back({*row.point, row.is_vertex, row.f});
    }
    auto want = want_rows;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    const bool ok = got == want && rep.max_f == 1 && rep.f_at_most_1 && rep.f_below_1_when_xn_negative &&
                    rep.max_only_with_xn_zero;
    r.expected += "n=" + std::to_string(n) + ": " + detail::rows_string(want) + "max f 1; ";
    r.computed += "n=" + std::to_string(n) + ": " + detail::rows_string(got) + "max f " + rep.max_f.str() + "; ";
    r.pass = r.pass && ok;
  }
  return r;
}

inline CheckResult check_09(const Context& ctx) {
  CheckResult r{"09", "(-1)-class counts for n = 3..8 with a saturating degree bound", "(-1)-class counts", true, "", "",
                0};
  const std::int64_t bound = 8;
  for (const auto& [n, want] : ctx.options.fixtures.minus_one_totals) {
    const auto counts = count_minus_one_by_degree(n, bound);
    Integer total = 0;
    std::int64_t top = 0;
    for (std::size_t d = 0; d < counts.size(); ++d) {
      total += counts[d];
      if (counts[d] != 0) top = static_cast<std::int64_t>(d);
    }
    const auto all = enumerate_minus_one(n, bound);
    const auto k = canonical_class(n);
    const bool valid = std::all_of(all.begin(), all.end(), [&](const MinusOneClass& c) {
      return square(c.cls) == -1 && pairing(c.cls, k) == -1;
    });
    const bool saturated = top + 2 <= bound;
    r.expected += "n=" + std::to_string(n) + ":" + std::to_string(want) + " ";
    r.computed += "n=" + std::to_string(n) + ":" + total.str() + " (max degree " + std::to_string(top) +
                  (valid ? "" : ", invalid class") + ") ";
    r.pass = r.pass && total == want && all.size() == static_cast<std::size_t>(want) && valid && saturated;
  }
  return r;
}

inline CheckResult check_10(const Context& ctx) {
  const int n_max = ctx.options.quick ? 8 : 10;
  CheckResult r{"10",
                "decomposition into d-1 cubics and one conic for every (-1)-class, 1 <= d <= 8, n <= " +
                    std::to_string(n_max),
                "decomposition of (-1)-class inequalities", true, "0 failures", "", 0};
  std::size_t total = 0, failures = 0;
  std::string first_failure;
  for (int n = 3; n <= n_max; ++n) {
    for (const auto& c : enumerate_minus_one(n, 8)) {
      if (c.degree() < 1) continue;
      ++total;
      bool ok = false;
      try {
        const auto dec = decompose_inequality(c);
        ok = Integer(dec.cubics.size()) == c.degree() - 1 && dec.sum() == c.cls;
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok) {
        if (failures == 0) first_failure = c.cls.to_string();
        ++failures;
      }
    }
  }
  r.computed = std::to_string(failures) + " failures over " + std::to_string(total) + " classes" +
               (first_failure.empty() ? "" : ", first " + first_failure);
  r.pass = failures == 0 && total > 0;
  return r;
}

inline CheckResult check_11(const Context& ctx) {
  const std::size_t samples = ctx.options.quick ? 1000 : 10000;
  CheckResult r{"11",
                "group action on " + std::to_string(samples) +
                    " random classes (n = 9, 10, 13): isometry, involution, K fixed, sigma identity",
                "Cremona generators and the transposition identity", true, "0 violations", "", 0};
  sampling::Rng rng(ctx.seed_for(11));
  const std::array<int, 3> ns{9, 10, 13};
  std::map<int, std::vector<Generator>> gens;
  std::size_t isometry = 0, involution = 0, kfix = 0, sigma = 0;
  for (int n : ns) {
    gens[n] = all_generators(n);
    const auto K = canonical_class(n);
    for (const auto& g : gens[n])
      if (apply_generator(g, K) != K) ++kfix;
  }
  const WeylWord transposition{{Generator::phi(1, 3, 4), Generator::phi(2, 3, 4), Generator::phi(1, 3, 4)}};
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = ns[s % ns.size()];
    const auto v = sampling::random_class(rng, n, -50, 50);
    const auto u = sampling::random_class(rng, n, -50, 50);
    const auto g = sampling::random_generator(rng, gens[n]);
    const auto gv = apply_generator(g, v);
    if (pairing(gv, apply_generator(g, u)) != pairing(v, u)) ++isometry;
    if (apply_generator(g, gv) != v) ++involution;
    if (apply_word(transposition, v) != apply_generator(Generator::sigma(1), v)) ++sigma;
  }
  r.computed = "isometry " + std::to_string(isometry) + ", involution " + std::to_string(involution) +
               ", K-fixing " + std::to_string(kfix) + ", sigma identity " + std::to_string(sigma) + " violations";
  r.pass = isometry + involution + kfix + sigma == 0;
  return r;
}

inline CheckResult check_12(const Context& ctx) {
  const std::size_t samples = ctx.options.quick ? 200 : 1000;
  CheckResult r{"12",
                "round trip of " + std::to_string(samples) + " interior points (n = 9, 12) through random words; " +
                    std::to_string(samples) + " non-nef witnesses",
                "reduction into the fundamental cone", true, "0 failures", "", 0};
  sampling::Rng rng(ctx.seed_for(12));
  const std::array<int, 2> ns{9, 12};
  std::map<int, std::vector<Ray>> rays;
  std::map<int, std::vector<Generator>> gens;
  for (int n : ns) {
    rays[n] = extremal_rays(fundamental_cone(n));
    gens[n] = all_generators(n);
  }
  std::size_t round_trip = 0, witness = 0, not_interior = 0, tries = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = ns[s % ns.size()];
    const auto v = sampling::random_cone_point(rng, rays[n], n, 1, 3);
    const auto cone = fundamental_cone(n);
    for (std::size_t i = 0; i < cone.constraint_count(); ++i)
      if (pairing(cone.constraint(i).normal, v) <= 0) ++not_interior;
    const auto w = sampling::random_word(rng, gens[n], 30);
    const auto u = apply_word(w, v);
    const auto red = reduce(u);
    if (!red.in_cone() || red.reduced != v || apply_word(red.witness, u) != red.reduced) ++round_trip;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = ns[s % ns.size()];
    while (true) {
      ++tries;
      const auto v = sampling::random_K_nonpositive(rng, n, -10, 10);
      const auto red = reduce(v);
      if (red.in_cone()) continue;
      if (!red.violated || pairing(v, *red.violated) >= 0 || !is_minus_one_class(*red.violated) ||
          apply_word(red.witness, v) != red.reduced)
        ++witness;
      break;
    }
  }
  r.computed = std::to_string(round_trip) + " round-trip failures, " + std::to_string(not_interior) +
               " non-interior samples, " + std::to_string(witness) + " bad witnesses (" + std::to_string(tries) +
               " draws for the non-nef half)";
  r.pass = round_trip + witness + not_interior == 0;
  return r;
}

inline CheckResult check_13(const Context& ctx) {
  const std::size_t samples = ctx.options.quick ? 200 : 1000;
  CheckResult r{"13",
                "reduction and curve check (degree 8) agree on " + std::to_string(samples) +
                    " K-nonpositive classes in [-10, 10]",
                "nef test on the K-nonpositive side", true, "0 disagreements", "", 0};
  sampling::Rng rng(ctx.seed_for(13));
  const std::array<int, 3> ns{9, 10, 12};
  std::map<int, std::vector<Ray>> small_rays;
  std::map<int, std::vector<Generator>> gens;
  std::map<int, CurveTable> tables;
  for (int n : ns) {
    for (auto& ray : extremal_rays(fundamental_cone(n)))
      if (sampling::within_box(ray.generator, -10, 10)) small_rays[n].push_back(ray);
    gens[n] = all_generators(n);
    tables[n] = curve_table(n, 8);
  }
  std::size_t nef = 0, not_nef = 0, disagree = 0, unsound = 0;
  std::string first;
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = ns[s % ns.size()];
    PicClass v;
    if (s % 3 == 0) {
      v = sampling::random_K_nonpositive(rng, n, -10, 10);
    } else {
      // A small cone point moved by a short random word, kept inside the box.
      const auto& pool = small_rays[n];
      while (true) {
        PicClass p = PicClass::zero(n);
        const auto picks = sampling::uniform(rng, 1, 3);
        for (std::int64_t k = 0; k < picks; ++k) {
          const auto& ray = pool[static_cast<std::size_t>(sampling::uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
          p = p + Integer(sampling::uniform(rng, 1, 2)) * ray.generator;
        }
        v = apply_word(sampling::random_word(rng, gens[n], 6), p);
        if (s % 3 == 2) {
          // Nudge one coordinate to land near the nef boundary.
          const auto i = static_cast<std::size_t>(sampling::uniform(rng, 0, n));
          v = v.with(i, v[i] + (sampling::uniform(rng, 0, 1) ? 1 : -1));
        }
        if (!v.is_zero() && sampling::within_box(v, -10, 10) && pairing(v, canonical_class(n)) <= 0) break;
      }
    }
    const auto exact = is_nef_K_nonpositive(v);
    const auto bounded = curve_check(v, tables[n]);
    (exact.nef ? nef : not_nef) += 1;
    if (exact.nef != bounded.nef) {
      if (first.empty()) first = v.to_string();
      ++disagree;
    }
    if (exact.nef && !bounded.nef) ++unsound;
  }
  r.computed = std::to_string(disagree) + " disagreements (" + std::to_string(unsound) + " nef classes violating a curve) over " +
               std::to_string(nef) + " nef and " + std::to_string(not_nef) + " non-nef samples" +
               (first.empty() ? "" : ", first " + first);
  r.pass = disagree == 0;
  return r;
}

// ---------------------------------------------------------------------------
// Registry.

struct CheckEntry {
  std::string id;
  std::function<CheckResult(const Context&)> run;
};

inline const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries{
      {"01", check_01},   {"02", check_02},   {"03", check_03},   {"04", check_04}, {"05", check_05},
      {"06", check_06},   {"07a", check_07a}, {"07b", check_07b}, {"07c", check_07c}, {"07d", check_07d},
      {"08", check_08},   {"09", check_09},   {"10", check_10},   {"11", check_11}, {"12", check_12},
      {"13", check_13},
  };
  return entries;
}

inline bool selected(const VerifyOptions& options, const std::string& id) {
  if (options.only.empty()) return true;
  return std::any_of(options.only.begin(), options.only.end(), [&](const std::string& o) {
    return o == id || (o.size() == 2 && id.size() == 3 && id.compare(0, 2, o) == 0);
  });
}

/// Runs the selected checks in registry order.  A check that throws is
/// reported as failed with the exception message.
inline VerificationReport run(const VerifyOptions& options) {
  VerificationReport report;
  report.suite = options.quick ? "quick" : "paper";
  report.seed = options.seed;
  const Context ctx{options};
  for (const auto& entry : registry()) {
    if (!selected(options, entry.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = entry.run(ctx);
    } catch (const std::exception& e) {
      result = {entry.id, "check " + entry.id, "", false, "no exception", std::string("exception: ") + e.what(), 0};
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace cremona::verify
