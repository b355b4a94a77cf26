#pragma once

// Polyhedral cones over hyperbolic polytopes.  A halfspace is {x : u . x >= 0}
// for an integer normal u with u^2 < 0.  Normals are never rescaled: every
// angle quantity goes through the scale-invariant cos^2 = (u.v)^2 / (u^2 v^2),
// which is rational, so classification is exact.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/lattice.hpp"
#include "cremona/linalg.hpp"
#include "cremona/parallel.hpp"

namespace cremona {

struct Halfspace {
  PicClass normal;
  std::string label;
};

/// The cone {x : u_i . x >= 0 for all i}.  `halfspaces` are genuine
/// hyperbolic facets (u^2 < 0) and take part in angle computations;
/// `extra_constraints` only restrict the cone (membership, rays).
struct ConePolytope {
  int n = 0;
  std::string name;
  std::vector<Halfspace> halfspaces;
  std::vector<Halfspace> extra_constraints;
  std::vector<std::string> notes;

  std::size_t constraint_count() const { return halfspaces.size() + extra_constraints.size(); }

  const Halfspace& constraint(std::size_t i) const {
    return i < halfspaces.size() ? halfspaces[i] : extra_constraints.at(i - halfspaces.size());
  }
};

inline ConePolytope make_cone(int n, std::string name, const std::vector<PicClass>& normals,
                              const std::vector<PicClass>& extras = {}) {
  ConePolytope p{n, std::move(name), {}, {}, {}};
  for (std::size_t i = 0; i < normals.size(); ++i) {
    require(normals[i].n() == n, "make_cone: normal has the wrong dimension");
    require(square(normals[i]) < 0, "make_cone: halfspace normal " + normals[i].to_string() +
                                        " must satisfy u^2 < 0");
    p.halfspaces.push_back({normals[i], "v" + std::to_string(i)});
  }
  for (std::size_t i = 0; i < extras.size(); ++i) {
    require(extras[i].n() == n, "make_cone: constraint has the wrong dimension");
    require(!extras[i].is_zero(), "make_cone: zero constraint");
    p.extra_constraints.push_back({extras[i], "c" + std::to_string(i)});
  }
  return p;
}

namespace detail {

inline PicClass root_e0_123(int n) {
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  c[1] = c[2] = c[3] = -1;
  return PicClass(std::move(c));
}

inline PicClass root_adjacent(int n, int i) { return PicClass::basis(n, i) - PicClass::basis(n, i + 1); }

}  // namespace detail

/// Normals v_0 = e_0 - e_1 - e_2 - e_3 and v_i = e_i - e_{i+1}, i = 1..n-1:
/// x_0 >= -x_1 - x_2 - x_3 and x_1 <= x_2 <= ... <= x_n.
inline ConePolytope build_P_tilde(int n) {
  require(n >= 3 && n <= 64, "build_P_tilde: n must be in 3..64");
  std::vector<PicClass> normals{detail::root_e0_123(n)};
  for (int i = 1; i < n; ++i) normals.push_back(detail::root_adjacent(n, i));
  auto p = make_cone(n, "p_tilde", normals);
  if (n == 3) p.notes.push_back("n = 3: only two transpositions; facet-minimality checks are not meaningful");
  return p;
}

/// P~ plus v_n = e_n (x_n <= 0).
inline ConePolytope build_P(int n) {
  require(n >= 3 && n <= 64, "build_P: n must be in 3..64");
  auto p = build_P_tilde(n);
  p.name = "p";
  p.halfspaces.push_back({PicClass::basis(n, n), "v" + std::to_string(n)});
  return p;
}

/// P plus v_{n+1} = -K (3 x_0 >= -sum x_i).  Needs n >= 10: for n = 9 the
/// normal -K has square 0 and the inequality follows from the others.
inline ConePolytope build_P_minus(int n) {
  require(n >= 10 && n <= 64, "build_P_minus: n must be in 10..64 (for n = 9 the -K inequality is implied)");
  auto p = build_P(n);
  p.name = "p_minus";
  p.halfspaces.push_back({anticanonical_class(n), "v" + std::to_string(n + 1)});
  return p;
}

struct MembershipResult {
  bool member = true;
  std::optional<std::size_t> violated_index;
  std::optional<PicClass> violated_normal;

  explicit operator bool() const { return member; }
};

inline MembershipResult membership(const ConePolytope& p, const PicClass& v) {
  require(v.n() == p.n, "membership: dimension mismatch");
  for (std::size_t i = 0; i < p.constraint_count(); ++i) {
    const auto& u = p.constraint(i).normal;
    if (pairing(u, v) < 0) return {false, i, u};
  }
  return {};
}

inline MembershipResult membership(const ConePolytope& p, const RationalRay& r) {
  return membership(p, clear_denominators(r));
}

/// G_ij = v_i . v_j over the (unnormalized) halfspace normals.
inline linalg::IntMatrix gram_matrix(const ConePolytope& p) {
  const std::size_t k = p.halfspaces.size();
  linalg::IntMatrix g(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) g[i][j] = g[j][i] = pairing(p.halfspaces[i].normal, p.halfspaces[j].normal);
  return g;
}

/// Angle between two halfspaces, from p = u.v and cos^2 = p^2 / (u^2 v^2).
///
/// Rational multiples of pi with rational cos^2 have cos^2 in
/// {0, 1/4, 1/2, 3/4, 1} (Niven), so the tags below are exhaustive.
struct AngleClass {
  enum class Tag { PiOver, ZeroAngle, Divergent, NonSubmultiple };

  Tag tag;
  int m = 0;          // for PiOver: the angle is pi/m
  Rational cos2;      // (u.v)^2 / (u^2 v^2); exceeds 1 when Divergent
  int sign = 0;       // sign of u.v
  bool obtuse = false;  // u.v < 0 with cos2 <= 1: never produced by these polytopes

  bool coxeter_compatible() const { return tag != Tag::NonSubmultiple; }

  std::string describe() const {
    switch (tag) {
      case Tag::PiOver: return "pi/" + std::to_string(m);
      case Tag::ZeroAngle: return "0";
      case Tag::Divergent: return "divergent";
      case Tag::NonSubmultiple: return obtuse ? "obtuse" : "not a submultiple of pi";
    }
    return "?";
  }

  friend bool operator==(const AngleClass&, const AngleClass&) = default;
};

inline AngleClass classify_angle(const PicClass& u, const PicClass& v) {
  const Integer uu = square(u), vv = square(v);
  require(uu < 0 && vv < 0, "classify_angle: both normals need negative square");
  const Integer p = pairing(u, v);
  AngleClass a{AngleClass::Tag::NonSubmultiple, 0, Rational(p * p, uu * vv), sign(p), false};
  if (a.cos2 > 1) {
    a.tag = AngleClass::Tag::Divergent;
  } else if (p == 0) {
    a.tag = AngleClass::Tag::PiOver;
    a.m = 2;
  } else if (p < 0) {
    a.obtuse = true;
  } else if (a.cos2 == 1) {
    a.tag = AngleClass::Tag::ZeroAngle;
  } else if (a.cos2 == Rational(1, 4)) {
    a.tag = AngleClass::Tag::PiOver;
    a.m = 3;
  } else if (a.cos2 == Rational(1, 2)) {
    a.tag = AngleClass::Tag::PiOver;
    a.m = 4;
  } else if (a.cos2 == Rational(3, 4)) {
    a.tag = AngleClass::Tag::PiOver;
    a.m = 6;
  }
  return a;
}

inline AngleClass classify_angle(const Halfspace& u, const Halfspace& v) { return classify_angle(u.normal, v.normal); }

/// a_ij = -sign * 2 * sqrt(cos2): the Cartan entry of normalized normals
/// (u^2 = -2), kept exact as (sign, cos2).
struct CartanEntry {
  int sign = 0;
  Rational cos2;

  friend bool operator==(const CartanEntry&, const CartanEntry&) = default;

  /// "2", "0", "-1", "-sqrt(2)", "-2/sqrt(k)", ...
  std::string render() const;
};

namespace detail {

inline std::optional<Integer> exact_sqrt(const Integer& x) {
  if (x < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(x);
  if (r * r == x) return r;
  return std::nullopt;
}

}  // namespace detail

inline std::string CartanEntry::render() const {
  if (cos2 == 0 || sign == 0) return "0";
  const std::string prefix = sign > 0 ? "-" : "";
  const Rational r = 4 * cos2;  // |a_ij|^2
  const Integer num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  const auto sn = detail::exact_sqrt(num), sd = detail::exact_sqrt(den);
  if (sn && sd) {
    std::string s = sn->str();
    if (*sd != 1) s += "/" + sd->str();
    return prefix + s;
  }
  if (den == 1) return prefix + "sqrt(" + num.str() + ")";
  const Rational k = 4 / r;
  if (boost::multiprecision::denominator(k) == 1) return prefix + "2/sqrt(" + boost::multiprecision::numerator(k).str() + ")";
  if (sn) return prefix + sn->str() + "/sqrt(" + den.str() + ")";
  return prefix + "sqrt(" + num.str() + "/" + den.str() + ")";
}

using CartanMatrix = std::vector<std::vector<CartanEntry>>;

inline CartanMatrix cartan_matrix(const ConePolytope& p) {
  const std::size_t k = p.halfspaces.size();
  CartanMatrix c(k, std::vector<CartanEntry>(k));
  for (std::size_t i = 0; i < k; ++i) {
    c[i][i] = {-1, Rational(1)};
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto a = classify_angle(p.halfspaces[i], p.halfspaces[j]);
      c[i][j] = c[j][i] = {a.sign, a.cos2};
    }
  }
  return c;
}

inline std::string render_cartan(const CartanMatrix& c) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : c) {
    cells.emplace_back();
    for (const auto& e : row) {
      cells.back().push_back(e.render());
      width = std::max(width, cells.back().back().size());
    }
  }
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::string(width - row[j].size(), ' ') + row[j];
    }
    out += '\n';
  }
  return out;
}

struct OffendingPair {
  std::size_t i, j;
  AngleClass angle;
};

struct CoxeterCheck {
  bool coxeter = true;
  std::vector<OffendingPair> offending;

  explicit operator bool() const { return coxeter; }
};

/// Coxeter iff every pair of distinct halfspaces meets at pi/m, at angle 0,
/// or diverges.
inline CoxeterCheck is_coxeter(const ConePolytope& p) {
  CoxeterCheck result;
  for (std::size_t i = 0; i < p.halfspaces.size(); ++i)
    for (std::size_t j = i + 1; j < p.halfspaces.size(); ++j) {
      const auto a = classify_angle(p.halfspaces[i], p.halfspaces[j]);
      if (!a.coxeter_compatible()) {
        result.coxeter = false;
        result.offending.push_back({i, j, a});
      }
    }
  return result;
}

struct DiagramEdge {
  enum class Style { Solid, Dashed, Dotted };

  std::size_t a, b;
  Style style = Style::Solid;
  int m = 0;             // pi/m for solid edges
  int multiplicity = 1;  // m - 2 parallel edges when solid

  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

class NotCoxeterError : public Error {
 public:
  NotCoxeterError(std::string what, std::vector<OffendingPair> pairs)
      : Error(std::move(what)), offending(std::move(pairs)) {}

  std::vector<OffendingPair> offending;
};

struct CoxeterDiagram {
  std::vector<std::string> nodes;
  std::vector<DiagramEdge> edges;

  std::string to_dot(const std::string& graph_name = "coxeter") const {
    std::ostringstream out;
    out << "graph " << graph_name << " {\n";
    out << "  node [shape=circle];\n";
    for (const auto& n : nodes) out << "  " << n << ";\n";
    for (const auto& e : edges) {
      const std::string line = "  " + nodes[e.a] + " -- " + nodes[e.b];
      switch (e.style) {
        case DiagramEdge::Style::Solid:
          for (int k = 0; k < e.multiplicity; ++k) out << line << ";\n";
          break;
        case DiagramEdge::Style::Dashed: out << line << " [style=dashed];\n"; break;
        case DiagramEdge::Style::Dotted: out << line << " [style=dotted];\n"; break;
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string to_ascii() const {
    std::ostringstream out;
    out << "nodes: " << nodes.size() << ", edges: " << edges.size() << '\n';
    for (const auto& e : edges) {
      out << "  " << nodes[e.a] << ' ';
      switch (e.style) {
        case DiagramEdge::Style::Solid:
          out << std::string(static_cast<std::size_t>(e.multiplicity), '=') << ' ' << nodes[e.b] << "  (pi/" << e.m
              << ", " << e.multiplicity << (e.multiplicity == 1 ? " edge)" : " edges)");
          break;
        case DiagramEdge::Style::Dashed: out << "- - " << nodes[e.b] << "  (angle 0, dashed)"; break;
        case DiagramEdge::Style::Dotted: out << ".. " << nodes[e.b] << "  (divergent, dotted)"; break;
      }
      out << '\n';
    }
    return out.str();
  }
};

inline CoxeterDiagram coxeter_diagram(const ConePolytope& p) {
  const auto check = is_coxeter(p);
  if (!check) {
    std::string what = p.name + "_" + std::to_string(p.n) + " is not a Coxeter polytope:";
    for (const auto& o : check.offending)
      what += " (" + p.halfspaces[o.i].label + ", " + p.halfspaces[o.j].label + ") cos2 = " + o.angle.cos2.str() + ";";
    throw NotCoxeterError(what, check.offending);
  }
  CoxeterDiagram d;
  for (const auto& h : p.halfspaces) d.nodes.push_back(h.label);
  for (std::size_t i = 0; i < p.halfspaces.size(); ++i)
    for (std::size_t j = i + 1; j < p.halfspaces.size(); ++j) {
      const auto a = classify_angle(p.halfspaces[i], p.halfspaces[j]);
      switch (a.tag) {
        case AngleClass::Tag::PiOver:
          if (a.m >= 3) d.edges.push_back({i, j, DiagramEdge::Style::Solid, a.m, a.m - 2});
          break;
        case AngleClass::Tag::ZeroAngle: d.edges.push_back({i, j, DiagramEdge::Style::Dashed, 0, 1}); break;
        case AngleClass::Tag::Divergent: d.edges.push_back({i, j, DiagramEdge::Style::Dotted, 0, 1}); break;
        case AngleClass::Tag::NonSubmultiple: break;
      }
    }
  return d;
}

struct Ray {
  PicClass generator;
  LightConePosition position;
  std::vector<std::size_t> active_set;  // constraint indices vanishing on the ray
};

namespace detail {

/// Row r with r . x (Euclidean) = u . x (Minkowski).
inline std::vector<Integer> pairing_row(const PicClass& u) {
  std::vector<Integer> r = u.vector();
  for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
  return r;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > m) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline bool feasible(const ConePolytope& p, const PicClass& x) { return membership(p, x).member; }

}  // namespace detail

/// Extremal rays of a pointed cone: for every n-subset of constraints whose
/// normals have rank n, the one-dimensional kernel, oriented into the cone.
/// Subsets are sharded over worker_count() threads and merged in order.
inline std::vector<Ray> extremal_rays(const ConePolytope& p) {
  const std::size_t dim = static_cast<std::size_t>(p.n) + 1;
  linalg::IntMatrix rows;
  for (std::size_t i = 0; i < p.constraint_count(); ++i) rows.push_back(detail::pairing_row(p.constraint(i).normal));
  if (linalg::rank(rows, dim) != dim)
    throw PreconditionError("extremal_rays: the cone is not pointed (constraint normals have rank < n+1)");

  const auto subsets = detail::combinations(rows.size(), dim - 1);
  const std::size_t shards = std::min<std::size_t>(worker_count(), subsets.size() / 16 + 1);
  std::vector<std::set<PicClass>> found(shards);
  parallel_shards(subsets.size(), shards, [&](std::size_t begin, std::size_t end, std::size_t s) {
    for (std::size_t t = begin; t < end; ++t) {
      linalg::IntMatrix sub;
      for (auto i : subsets[t]) sub.push_back(rows[i]);
      const auto kernel = linalg::nullspace(sub, dim);
      if (kernel.size() != 1) continue;
      const PicClass k(kernel.front());
      if (detail::feasible(p, k))
        found[s].insert(k);
      else if (detail::feasible(p, -k))
        found[s].insert(-k);
    }
  });

  std::set<PicClass> merged;
  for (auto& f : found) merged.insert(f.begin(), f.end());
  std::vector<Ray> out;
  for (const auto& g : merged) {
    Ray r{g, light_cone_position(g), {}};
    for (std::size_t i = 0; i < p.constraint_count(); ++i)
      if (pairing(p.constraint(i).normal, g) == 0) r.active_set.push_back(i);
    out.push_back(std::move(r));
  }
  return out;
}

/// Extremal rays on the light cone (ideal vertices).
inline std::vector<Ray> boundary_rays(const ConePolytope& p) {
  std::vector<Ray> out;
  for (auto& r : extremal_rays(p))
    if (r.position.tag == LightConePosition::Tag::Boundary) out.push_back(std::move(r));
  return out;
}

inline bool finite_volume(const std::vector<Ray>& rays) {
  return std::all_of(rays.begin(), rays.end(), [](const Ray& r) {
    return r.position.tag != LightConePosition::Tag::Outside && r.position.forward;
  });
}

/// True iff the cone sits inside the closed forward light cone, i.e. every
/// extremal ray r has r^2 >= 0 and x_0 > 0.
inline bool finite_volume(const ConePolytope& p) { return finite_volume(extremal_rays(p)); }

/// Indices of halfspaces implied by the others.  A minimal description
/// returns an empty list; violations are reported, never removed.
inline std::vector<std::size_t> minimality_audit(const ConePolytope& p) {
  std::vector<std::size_t> redundant;
  for (std::size_t j = 0; j < p.halfspaces.size(); ++j) {
    ConePolytope rest = p;
    rest.halfspaces.erase(rest.halfspaces.begin() + static_cast<std::ptrdiff_t>(j));
    try {
      const auto rays = extremal_rays(rest);
      const auto& u = p.halfspaces[j].normal;
      if (std::all_of(rays.begin(), rays.end(), [&](const Ray& r) { return pairing(u, r.generator) >= 0; }))
        redundant.push_back(j);
    } catch (const PreconditionError&) {
      // Without halfspace j the cone has a lineality direction on which u_j
      // is nonzero, so u_j is needed.
    }
  }
  return redundant;
}

// ---------------------------------------------------------------------------
// Vertices of P^-_n: the eight parametrized families.

struct FamilyPoint {
  std::string family;
  PicClass point;  // as written in the family (not necessarily primitive)
};

inline std::vector<FamilyPoint> vertex_family_points(int n) {
  require(n >= 10 && n <= 64, "vertex families are defined for 10 <= n <= 64");
  auto make = [n](std::initializer_list<std::pair<long long, int>> runs) {
    std::vector<Integer> x;
    for (const auto& [value, count] : runs)
      for (int c = 0; c < count; ++c) x.emplace_back(value);
    require(x.size() <= static_cast<std::size_t>(n) + 1, "family index out of range");
    x.resize(static_cast<std::size_t>(n) + 1);
    return PicClass(std::move(x));
  };
  std::vector<FamilyPoint> out;
  out.push_back({"(1:0:...:0)", make({{1, 1}})});
  out.push_back({"(1:-1:0:...:0)", make({{1, 1}, {-1, 1}})});
  out.push_back({"(2:-1:-1:0:...:0)", make({{2, 1}, {-1, 2}})});
  for (int k = 3; k <= 9; ++k) out.push_back({"(3:-1^k), k=" + std::to_string(k), make({{3, 1}, {-1, k}})});
  for (int m = 10; m <= n; ++m) out.push_back({"(m:-3^m), m=" + std::to_string(m), make({{m, 1}, {-3, m}})});
  for (int b = 9; b <= n - 1; ++b)
    out.push_back({"(b-2:-(b-6):-2^b), b=" + std::to_string(b), make({{b - 2, 1}, {-(b - 6), 1}, {-2, b}})});
  for (int b = 8; b <= n - 2; ++b)
    out.push_back({"(2b-2:-(b-3)^2:-4^b), b=" + std::to_string(b), make({{2 * b - 2, 1}, {-(b - 3), 2}, {-4, b}})});
  for (int a = 3; a <= 8; ++a)
    for (int b = 10 - a; a + b <= n; ++b)
      out.push_back({"(3b:-b^a:-(9-a)^b), a=" + std::to_string(a) + " b=" + std::to_string(b),
                     make({{3 * b, 1}, {-b, a}, {-(9 - a), b}})});
  return out;
}

struct VertexFormulaReport {
  int n = 0;
  std::size_t expected_count = 0;  // 9n - 71
  std::size_t family_count = 0;    // members listed, before deduplication
  std::vector<PicClass> family_rays;
  std::vector<PicClass> enumerated_rays;
  std::vector<PicClass> missing;  // in the families, not enumerated
  std::vector<PicClass> extra;    // enumerated, not in the families

  bool sets_equal() const { return missing.empty() && extra.empty(); }
  bool count_ok() const { return enumerated_rays.size() == expected_count && family_rays.size() == expected_count; }
  bool ok() const { return sets_equal() && count_ok(); }
};

inline VertexFormulaReport verify_vertex_formulas(int n) {
  VertexFormulaReport r;
  r.n = n;
  r.expected_count = static_cast<std::size_t>(9 * n - 71);
  const auto family = vertex_family_points(n);
  r.family_count = family.size();
  std::set<PicClass> fam;
  for (const auto& f : family) fam.insert(primitive(f.point));
  std::set<PicClass> enumd;
  for (const auto& ray : extremal_rays(build_P_minus(n))) enumd.insert(ray.generator);
  r.family_rays.assign(fam.begin(), fam.end());
  r.enumerated_rays.assign(enumd.begin(), enumd.end());
  std::set_difference(fam.begin(), fam.end(), enumd.begin(), enumd.end(), std::back_inserter(r.missing));
  std::set_difference(enumd.begin(), enumd.end(), fam.begin(), fam.end(), std::back_inserter(r.extra));
  return r;
}

// ---------------------------------------------------------------------------
// The auxiliary region R in the affine chart x_0 = 1, coordinates
// (x_1, x_2, x_n), with the standard Euclidean structure of Q^3.

struct AffineConstraint {
  std::array<Rational, 3> a;  // a . (x_1, x_2, x_n) >= b
  Rational b;
  std::string text;

  bool holds(const std::array<Rational, 3>& x) const { return a[0] * x[0] + a[1] * x[1] + a[2] * x[2] >= b; }
  bool tight(const std::array<Rational, 3>& x) const { return a[0] * x[0] + a[1] * x[1] + a[2] * x[2] == b; }
};

inline std::vector<AffineConstraint> region_R_constraints(int n) {
  require(n >= 10, "region R is defined for n >= 10");
  const Rational nm2(n - 2);
  return {
      {{1, 2, 0}, -1, "x1 + 2 x2 >= -1"},
      {{-1, 1, 0}, 0, "x1 <= x2"},
      {{0, -1, 1}, 0, "x2 <= xn"},
      {{0, 0, -1}, 0, "xn <= 0"},
      {{1, nm2, 1}, -3, "x1 + (n-2) x2 + xn >= -3"},
  };
}

struct RegionRRow {
  std::array<std::size_t, 3> planes{};
  std::optional<std::array<Rational, 3>> point;  // nullopt if the planes do not meet in a point
  bool is_vertex = false;
  std::vector<std::size_t> violated;  // constraints failing at the point
  std::optional<Rational> f;          // x1^2 + (n-2) x2^2 + xn^2 at vertices
};

struct RegionRReport {
  int n = 0;
  std::vector<AffineConstraint> constraints;
  std::vector<RegionRRow> rows;
  Rational max_f;
  bool f_at_most_1 = true;             // at every vertex
  bool f_below_1_when_xn_negative = true;
  bool max_only_with_xn_zero = true;   // f = max_f only at vertices with xn = 0

  std::vector<std::array<Rational, 3>> vertices() const {
    std::set<std::array<Rational, 3>> s;
    for (const auto& r : rows)
      if (r.is_vertex) s.insert(*r.point);
    return {s.begin(), s.end()};
  }
};

inline Rational region_R_objective(int n, const std::array<Rational, 3>& x) {
  return x[0] * x[0] + Rational(n - 2) * x[1] * x[1] + x[2] * x[2];
}

/// Intersects every triple of the five facet planes of R, classifies the
/// point as a vertex (all five inequalities hold) or not, and evaluates
/// f = x1^2 + (n-2) x2^2 + xn^2 exactly at the vertices.
inline RegionRReport verify_region_R(int n) {
  RegionRReport rep;
  rep.n = n;
  rep.constraints = region_R_constraints(n);
  const auto& c = rep.constraints;
  bool any_vertex = false;
  for (const auto& t : detail::combinations(c.size(), 3)) {
    RegionRRow row;
    row.planes = {t[0], t[1], t[2]};
    const auto& A = c[t[0]].a;
    const auto& B = c[t[1]].a;
    const auto& C = c[t[2]].a;
    auto det3 = [](const std::array<Rational, 3>& r0, const std::array<Rational, 3>& r1, const std::array<Rational, 3>& r2) {
      return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
             r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
    };
    const Rational det = det3(A, B, C);
    if (det != 0) {
      std::array<Rational, 3> x;
      const std::array<Rational, 3> rhs{c[t[0]].b, c[t[1]].b, c[t[2]].b};
      for (std::size_t k = 0; k < 3; ++k) {  // Cramer's rule
        auto a2 = A, b2 = B, c2 = C;
        a2[k] = rhs[0];
        b2[k] = rhs[1];
        c2[k] = rhs[2];
        x[k] = det3(a2, b2, c2) / det;
      }
      row.point = x;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].holds(x)) row.violated.push_back(i);
      row.is_vertex = row.violated.empty();
      if (row.is_vertex) {
        row.f = region_R_objective(n, x);
        if (!any_vertex || *row.f > rep.max_f) rep.max_f = *row.f;
        any_vertex = true;
        if (*row.f > 1) rep.f_at_most_1 = false;
        if (x[2] < 0 && *row.f >= 1) rep.f_below_1_when_xn_negative = false;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  for (const auto& r : rep.rows)
    if (r.is_vertex && *r.f == rep.max_f && (*r.point)[2] != 0) rep.max_only_with_xn_zero = false;
  return rep;
}

}  // namespace cremona
