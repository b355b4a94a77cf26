#pragma once

// (-1)-classes c = (d, -m_1, ..., -m_n): c^2 = -1, c . K = -1, 0 <= m_l <= d.
//
// For n <= 9 these are exactly the W-orbit of e_n.  For n >= 10 the
// Diophantine system has further solutions (e.g. (5; 3,3,1^8) for n = 10);
// they are still effective by Riemann-Roch, so pairing against them is a
// valid necessary condition for nefness.  in_exceptional_orbit() separates
// the two kinds.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/lattice.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

struct MinusOneClass {
  PicClass cls;

  const Integer& degree() const { return cls.degree(); }

  /// m_l = -x_l for l = 1..n.
  std::vector<Integer> multiplicities() const {
    std::vector<Integer> m;
    for (std::size_t l = 1; l < cls.size(); ++l) m.push_back(-cls[l]);
    return m;
  }

  friend bool operator==(const MinusOneClass&, const MinusOneClass&) = default;
  friend auto operator<=>(const MinusOneClass& a, const MinusOneClass& b) { return a.cls <=> b.cls; }
};

inline bool is_minus_one_class(const PicClass& v) {
  const Integer& d = v[0];
  if (d < 0) return false;
  if (square(v) != -1) return false;
  // v . K = -3 x_0 - sum x_l
  Integer vk = -3 * d;
  for (std::size_t l = 1; l < v.size(); ++l) vk -= v[l];
  if (vk != -1) return false;
  if (d == 0) {
    // c^2 = -1 with x_0 = 0 leaves a single +-1; v . K = -1 picks e_i.
    return true;
  }
  for (std::size_t l = 1; l < v.size(); ++l)
    if (v[l] > 0 || v[l] < -d) return false;
  return true;
}

/// Non-increasing multiplicity vectors (m_1 >= ... >= m_n >= 0, m_l <= d) with
/// sum m = 3d - 1 and sum m^2 = d^2 + 1, for a fixed degree d >= 1.
inline std::vector<std::vector<std::int64_t>> minus_one_multisets(int n, std::int64_t d) {
  require(n >= 3, "(-1)-classes need n >= 3");
  require(d >= 1 && d <= 1'000'000, "multiset search degree out of range");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> prefix;
  prefix.reserve(static_cast<std::size_t>(n));

  // Depth-first search with the usual feasibility bounds: the remaining sum
  // must fit under the current cap, and sum^2 <= slots * squares (Cauchy).
  auto rec = [&](auto&& self, std::int64_t rem_sum, std::int64_t rem_sq, std::int64_t cap, int slots) -> void {
    if (slots == 0) {
      if (rem_sum == 0 && rem_sq == 0) out.push_back(prefix);
      return;
    }
    for (std::int64_t m = std::min(cap, rem_sum); m >= 0; --m) {
      if (m * m > rem_sq) continue;
      if (m * slots < rem_sum) break;
      const std::int64_t rs = rem_sum - m, rq = rem_sq - m * m;
      if (rq > m * rs) continue;
      if (slots > 1 && rs * rs > rq * (slots - 1)) continue;
      if (slots == 1 && (rs != 0 || rq != 0)) continue;
      prefix.push_back(m);
      self(self, rs, rq, m, slots - 1);
      prefix.pop_back();
    }
  };
  rec(rec, 3 * d - 1, d * d + 1, d, n);
  return out;
}

/// Number of distinct coordinate placements of a multiset (a multinomial).
inline Integer placement_count(const std::vector<std::int64_t>& multiset) {
  Integer result = 1;
  std::size_t placed = 0;
  for (std::size_t i = 0; i < multiset.size();) {
    std::size_t j = i;
    while (j < multiset.size() && multiset[j] == multiset[i]) ++j;
    for (std::size_t k = 1; k <= j - i; ++k) {
      result = result * (placed + k) / k;
    }
    placed += j - i;
    i = j;
  }
  return result;
}

/// Number of (-1)-classes of each degree 0..max_degree, without expanding.
inline std::vector<Integer> count_minus_one_by_degree(int n, std::int64_t max_degree) {
  require(n >= 3, "(-1)-classes need n >= 3");
  require(max_degree >= 0, "max_degree must be nonnegative");
  std::vector<Integer> counts{Integer(n)};
  for (std::int64_t d = 1; d <= max_degree; ++d) {
    Integer c = 0;
    for (const auto& ms : minus_one_multisets(n, d)) c += placement_count(ms);
    counts.push_back(c);
  }
  return counts;
}

/// All (-1)-classes of degree <= max_degree, sorted lexicographically.
inline std::vector<MinusOneClass> enumerate_minus_one(int n, std::int64_t max_degree) {
  require(n >= 3, "(-1)-classes need n >= 3");
  require(max_degree >= 0, "max_degree must be nonnegative");
  std::vector<MinusOneClass> out;
  for (int i = 1; i <= n; ++i) out.push_back({PicClass::basis(n, i)});
  for (std::int64_t d = 1; d <= max_degree; ++d) {
    for (auto ms : minus_one_multisets(n, d)) {
      std::sort(ms.begin(), ms.end());
      do {
        std::vector<Integer> x(static_cast<std::size_t>(n) + 1);
        x[0] = d;
        for (std::size_t l = 0; l < ms.size(); ++l) x[l + 1] = -ms[l];
        out.push_back({PicClass(std::move(x))});
      } while (std::next_permutation(ms.begin(), ms.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Cremona descent of a (-1)-class to some e_i: sort, apply Phi(1,2,3) while
/// x_0 + x_1 + x_2 + x_3 < 0.  Returns the word w with apply_word(w, c) = e_i,
/// or nullopt when c is not in the W-orbit of the exceptional classes.
inline std::optional<WeylWord> exceptional_descent(const PicClass& c) {
  if (c.n() < 3 || !is_minus_one_class(c)) return std::nullopt;
  std::vector<Integer> x = c.vector();
  WeylWord word;
  const auto w0 = Generator::phi(1, 2, 3);
  while (true) {
    detail::sort_in_place(x, word);
    if (x[0] == 0) {
      // is_minus_one_class is W-invariant, so this is e_n.
      return word;
    }
    if (x[0] < 0 || x[0] + x[1] + x[2] + x[3] >= 0) return std::nullopt;
    detail::apply_in_place(w0, x);
    word.gens.push_back(w0);
  }
}

inline bool in_exceptional_orbit(const PicClass& c) { return exceptional_descent(c).has_value(); }

/// d x_0 + sum m_l x_l >= 0 written as d-1 cubic inequalities
/// x_0 + x_i + x_j + x_k >= 0 and one conic inequality x_0 + x_a + x_b >= 0.
struct Decomposition {
  std::vector<PicClass> cubics;
  PicClass conic;

  PicClass sum() const {
    PicClass total = conic;
    for (const auto& c : cubics) total = total + c;
    return total;
  }
};

/// Greedy decomposition: while d > 1 take the three largest current m
/// (smallest indices on ties), emit e_0 - e_i - e_j - e_k and decrement.
/// Requires d >= 1, 0 <= m_l <= d and 3d - sum m = 1; the loop keeps
/// m_l <= d at every step.
inline Decomposition decompose_inequality(const PicClass& c) {
  const int n = c.n();
  require(n >= 3, "decompose_inequality: n must be at least 3");
  require(c[0] >= 1, "decompose_inequality: degree 0 classes give coordinate halfspaces, nothing to decompose");
  Integer d = c[0];
  std::vector<Integer> m;
  Integer total = 0;
  for (std::size_t l = 1; l < c.size(); ++l) {
    m.push_back(-c[l]);
    require(m.back() >= 0 && m.back() <= d, "decompose_inequality: multiplicities must satisfy 0 <= m_l <= d");
    total += m.back();
  }
  require(3 * d - total == 1, "decompose_inequality: needs 3d - sum m = 1");

  std::vector<std::size_t> order(m.size());
  Decomposition out;
  while (d > 1) {
    for (std::size_t l = 0; l < order.size(); ++l) order[l] = l;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m[a] > m[b]; });
    std::vector<Integer> x(static_cast<std::size_t>(n) + 1);
    x[0] = 1;
    for (std::size_t t = 0; t < 3; ++t) {
      if (m[order[t]] <= 0) throw std::logic_error("decompose_inequality: fewer than three positive multiplicities");
      m[order[t]] -= 1;
      x[order[t] + 1] = -1;
    }
    out.cubics.emplace_back(std::move(x));
    d -= 1;
    for (const auto& ml : m)
      if (ml > d) throw std::logic_error("decompose_inequality: induction invariant m_l <= d broken");
  }
  std::vector<Integer> x(static_cast<std::size_t>(n) + 1);
  x[0] = 1;
  int ones = 0;
  for (std::size_t l = 0; l < m.size(); ++l) {
    if (m[l] == 1) {
      x[l + 1] = -1;
      ++ones;
    } else if (m[l] != 0) {
      throw std::logic_error("decompose_inequality: degree-1 remainder is not a conic");
    }
  }
  if (ones != 2) throw std::logic_error("decompose_inequality: degree-1 remainder is not a conic");
  out.conic = PicClass(std::move(x));
  return out;
}

inline Decomposition decompose_inequality(const MinusOneClass& c) { return decompose_inequality(c.cls); }

}  // namespace cremona
