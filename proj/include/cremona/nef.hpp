#pragma once

// Nef-cone facade.  On the K-nonpositive side, nefness is decided exactly by
// reducing into the fundamental cone C_n.  curve_check is the weaker,
// degree-bounded test against (-1)-classes and is labeled as such.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cremona/curves.hpp"
#include "cremona/error.hpp"
#include "cremona/lattice.hpp"
#include "cremona/polytopes.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

/// C_n: P_n for 3 <= n <= 9 (the -K inequality is implied there) and P^-_n
/// for n >= 10.
inline ConePolytope fundamental_cone(int n) {
  require(n >= 3, "fundamental_cone: n must be at least 3");
  ConePolytope c = n >= 10 ? build_P_minus(n) : build_P(n);
  c.name = "fundamental";
  return c;
}

struct NefMethod {
  enum class Kind { ReductionExact, CurveCheckUpToDegree };

  Kind kind = Kind::ReductionExact;
  std::int64_t max_degree = 0;  // for CurveCheckUpToDegree

  std::string to_string() const {
    return kind == Kind::ReductionExact ? "reduction_exact"
                                        : "curve_check_up_to_degree(" + std::to_string(max_degree) + ")";
  }

  friend bool operator==(const NefMethod&, const NefMethod&) = default;
};

struct NefVerdict {
  bool nef = false;
  NefMethod method;
  /// Nef by reduction: w with apply_word(w, v) in C_n.  Also present for
  /// NotNef by reduction (the word up to the stopping point).
  std::optional<WeylWord> word;
  std::optional<PicClass> reduced;
  /// NotNef: a class c with v . c < 0 (a (-1)-class, or v itself when v^2 < 0).
  std::optional<PicClass> violating;
  std::string reason;

  /// Nef from curve_check only means no violation was found up to the bound.
  bool conclusive() const { return !nef || method.kind == NefMethod::Kind::ReductionExact; }
};

/// Exact decision for integer classes with v . K <= 0.
inline NefVerdict is_nef_K_nonpositive(const PicClass& v) {
  require(v.n() >= 3, "nef test: n must be at least 3");
  require(pairing(v, canonical_class(v.n())) <= 0, "K-positive side not supported (v . K > 0)");
  NefVerdict out;
  out.method = {NefMethod::Kind::ReductionExact, 0};
  if (v.is_zero()) {
    out.nef = true;
    out.word = WeylWord{};
    out.reduced = v;
    out.reason = "zero class";
    return out;
  }
  auto r = reduce(v);
  out.word = std::move(r.witness);
  out.reduced = std::move(r.reduced);
  if (r.in_cone()) {
    out.nef = true;
    out.reason = "reduces into the fundamental cone";
  } else {
    out.violating = std::move(r.violated);
    out.reason = r.violated_description;
  }
  return out;
}

namespace detail {

/// min over placements of d x_0 + sum m_l x_l, attained by pairing the
/// largest multiplicities with the smallest coordinates (ties by index).
/// Returns the pairing and the class realizing it.
inline std::pair<Integer, PicClass> min_pairing_placement(const PicClass& v, std::int64_t d,
                                                          const std::vector<std::int64_t>& desc,
                                                          const std::vector<std::size_t>& ascending_order) {
  std::vector<Integer> c(v.size());
  c[0] = d;
  Integer p = d * v[0];
  for (std::size_t t = 0; t < desc.size(); ++t) {
    const std::size_t l = ascending_order[t] + 1;
    c[l] = -desc[t];
    p += desc[t] * v[l];
  }
  return {p, PicClass(std::move(c))};
}

}  // namespace detail

/// Multiplicity multisets of the (-1)-classes of degree 1..max_degree,
/// reusable across many curve_check calls with the same n.
struct CurveTable {
  int n = 0;
  std::int64_t max_degree = 0;
  std::vector<std::vector<std::vector<std::int64_t>>> by_degree;  // index d-1
};

inline CurveTable curve_table(int n, std::int64_t max_degree) {
  require(n >= 3, "curve_check: n must be at least 3");
  require(max_degree >= 0, "curve_check: max_degree must be nonnegative");
  CurveTable t{n, max_degree, {}};
  for (std::int64_t d = 1; d <= max_degree; ++d) t.by_degree.push_back(minus_one_multisets(n, d));
  return t;
}

/// Necessary condition: v . c >= 0 for every (-1)-class c of degree <=
/// max_degree, and v^2 >= 0.  The first failure (lowest degree; within a
/// degree the most negative pairing) is returned as the witness.
inline NefVerdict curve_check(const PicClass& v, const CurveTable& table) {
  const int n = v.n();
  require(n == table.n, "curve_check: table built for a different n");
  const std::int64_t max_degree = table.max_degree;
  NefVerdict out;
  out.method = {NefMethod::Kind::CurveCheckUpToDegree, max_degree};

  // Degree 0: the exceptional classes e_i, with e_i . v = x_i.
  for (int i = 1; i <= n; ++i) {
    if (v[static_cast<std::size_t>(i)] > 0) {
      out.violating = PicClass::basis(n, i);
      out.reason = "(-1)-class of degree 0";
      return out;
    }
  }
  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a + 1] < v[b + 1]; });

  for (std::int64_t d = 1; d <= max_degree; ++d) {
    std::optional<std::pair<Integer, PicClass>> worst;
    for (const auto& ms : table.by_degree[static_cast<std::size_t>(d - 1)]) {
      auto cand = detail::min_pairing_placement(v, d, ms, order);
      if (cand.first < 0 && (!worst || cand.first < worst->first)) worst = std::move(cand);
    }
    if (worst) {
      out.violating = std::move(worst->second);
      out.reason = "(-1)-class of degree " + std::to_string(d);
      return out;
    }
  }
  if (square(v) < 0) {
    out.violating = v;
    out.reason = "self_intersection";
    return out;
  }
  out.nef = true;
  out.reason = "no violation up to degree " + std::to_string(max_degree);
  return out;
}

inline NefVerdict curve_check(const PicClass& v, std::int64_t max_degree) {
  return curve_check(v, curve_table(v.n(), max_degree));
}

}  // namespace cremona
