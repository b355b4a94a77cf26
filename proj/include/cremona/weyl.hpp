#pragma once

// The Cremona action W = <phi_ijk> on the Picard lattice, and the reduction of
// a K-nonpositive class into the fundamental cone
//   x_0 + x_1 + x_2 + x_3 >= 0,  x_1 <= x_2 <= ... <= x_n <= 0
// (plus 3 x_0 >= -sum x_i for n >= 10, which holds whenever v . K <= 0).

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/lattice.hpp"

namespace cremona {

/// One generator of W: the quadratic transformation Phi(i,j,k) (indices
/// stored sorted) or the adjacent transposition Sigma(i) = swap(x_i, x_{i+1}).
class Generator {
 public:
  enum class Kind { Phi, Sigma };

  static Generator phi(int i, int j, int k) {
    require(i != j && j != k && i != k, "phi: indices must be distinct");
    std::array<int, 3> idx{i, j, k};
    std::sort(idx.begin(), idx.end());
    require(idx[0] >= 1, "phi: indices start at 1");
    return Generator(Kind::Phi, idx);
  }

  static Generator sigma(int i) {
    require(i >= 1, "sigma: index starts at 1");
    return Generator(Kind::Sigma, {i, i + 1, 0});
  }

  Kind kind() const { return kind_; }
  bool is_phi() const { return kind_ == Kind::Phi; }
  const std::array<int, 3>& indices() const { return idx_; }

  /// Largest coordinate index touched; must be <= n.
  int max_index() const { return is_phi() ? idx_[2] : idx_[1]; }

  void check(int n) const {
    require(n >= 3, "the Cremona action needs n >= 3");
    require(max_index() <= n, "generator " + to_string() + " out of range for n = " + std::to_string(n));
  }

  std::string to_string() const {
    if (is_phi())
      return "phi(" + std::to_string(idx_[0]) + "," + std::to_string(idx_[1]) + "," +
             std::to_string(idx_[2]) + ")";
    return "sigma(" + std::to_string(idx_[0]) + ")";
  }

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  Generator(Kind kind, std::array<int, 3> idx) : kind_(kind), idx_(idx) {}

  Kind kind_;
  std::array<int, 3> idx_;
};

/// A word in the generators, applied left to right.
struct WeylWord {
  std::vector<Generator> gens;

  std::size_t size() const { return gens.size(); }
  bool empty() const { return gens.empty(); }

  void append(const WeylWord& other) { gens.insert(gens.end(), other.gens.begin(), other.gens.end()); }

  /// Every generator is an involution, so the inverse is the reversed word.
  WeylWord inverse() const { return {std::vector<Generator>(gens.rbegin(), gens.rend())}; }

  std::size_t phi_count() const {
    return static_cast<std::size_t>(std::count_if(gens.begin(), gens.end(), [](const Generator& g) { return g.is_phi(); }));
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i].to_string();
    return out + "]";
  }

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

namespace detail {

inline void apply_in_place(const Generator& g, std::vector<Integer>& x) {
  const auto& idx = g.indices();
  if (g.is_phi()) {
    const std::size_t i = idx[0], j = idx[1], k = idx[2];
    const Integer x0 = x[0], xi = x[i], xj = x[j], xk = x[k];
    x[0] = 2 * x0 + xi + xj + xk;
    x[i] = -x0 - xj - xk;
    x[j] = -x0 - xi - xk;
    x[k] = -x0 - xi - xj;
  } else {
    std::swap(x[static_cast<std::size_t>(idx[0])], x[static_cast<std::size_t>(idx[1])]);
  }
}

/// Stable bubble sort of x_1..x_n ascending; every swap is recorded as a
/// Sigma generator, so the word is a reduced expression of the permutation.
inline void sort_in_place(std::vector<Integer>& x, WeylWord& word) {
  const std::size_t n = x.size() - 1;
  for (std::size_t pass = n; pass > 1; --pass) {
    bool swapped = false;
    for (std::size_t i = 1; i < pass; ++i) {
      if (x[i + 1] < x[i]) {
        std::swap(x[i], x[i + 1]);
        word.gens.push_back(Generator::sigma(static_cast<int>(i)));
        swapped = true;
      }
    }
    if (!swapped) break;
  }
}

}  // namespace detail

inline PicClass apply_generator(const Generator& g, const PicClass& v) {
  g.check(v.n());
  std::vector<Integer> x = v.vector();
  detail::apply_in_place(g, x);
  return PicClass(std::move(x));
}

inline PicClass apply_word(const WeylWord& w, const PicClass& v) {
  for (const auto& g : w.gens) g.check(v.n());
  std::vector<Integer> x = v.vector();
  for (const auto& g : w.gens) detail::apply_in_place(g, x);
  return PicClass(std::move(x));
}

/// Normal of the mirror fixed by g: e_0 - e_i - e_j - e_k for Phi(i,j,k),
/// e_i - e_{i+1} for Sigma(i).
inline PicClass fixed_hyperplane_normal(const Generator& g, int n) {
  g.check(n);
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  const auto& idx = g.indices();
  if (g.is_phi()) {
    c[0] = 1;
    for (int i : idx) c[static_cast<std::size_t>(i)] = -1;
  } else {
    c[static_cast<std::size_t>(idx[0])] = 1;
    c[static_cast<std::size_t>(idx[1])] = -1;
  }
  return PicClass(std::move(c));
}

/// All generators for rank n: every Phi(i,j,k) with i<j<k in lexicographic
/// order, then Sigma(1..n-1).
inline std::vector<Generator> all_generators(int n) {
  require(n >= 3, "the Cremona action needs n >= 3");
  std::vector<Generator> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back(Generator::phi(i, j, k));
  for (int i = 1; i < n; ++i) out.push_back(Generator::sigma(i));
  return out;
}

/// The standard generators w_0 = Phi(1,2,3), w_i = Sigma(i).
inline std::vector<Generator> standard_generators(int n) {
  require(n >= 3, "the Cremona action needs n >= 3");
  std::vector<Generator> out{Generator::phi(1, 2, 3)};
  for (int i = 1; i < n; ++i) out.push_back(Generator::sigma(i));
  return out;
}

inline std::pair<PicClass, WeylWord> sort_coordinates(const PicClass& v) {
  std::vector<Integer> x = v.vector();
  WeylWord word;
  detail::sort_in_place(x, word);
  return {PicClass(std::move(x)), std::move(word)};
}

/// True iff v satisfies x_0+x_1+x_2+x_3 >= 0, x_1 <= ... <= x_n <= 0 and,
/// for n >= 10, 3 x_0 + sum x_i >= 0.
inline bool in_fundamental_cone(const PicClass& v) {
  const int n = v.n();
  require(n >= 3, "the fundamental cone needs n >= 3");
  if (v[0] + v[1] + v[2] + v[3] < 0) return false;
  for (std::size_t i = 1; i < static_cast<std::size_t>(n); ++i)
    if (v[i + 1] < v[i]) return false;
  if (v[static_cast<std::size_t>(n)] > 0) return false;
  if (n >= 10) {
    Integer s = 3 * v[0];
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) s += v[i];
    if (s < 0) return false;
  }
  return true;
}

struct ReductionResult {
  enum class Status { InFundamentalCone, NotNef };

  Status status;
  /// The class reached when the loop stopped; equals apply_word(witness, input).
  PicClass reduced;
  WeylWord witness;
  /// For NotNef: a (-1)-class c, expressed in the input's coordinates, with
  /// input . c < 0.
  std::optional<PicClass> violated;
  /// The same constraint in the coordinates of `reduced`.
  std::optional<PicClass> violated_at_stop;
  std::string violated_description;
  std::size_t phi_steps = 0;
  std::size_t iterations = 0;

  bool in_cone() const { return status == Status::InFundamentalCone; }
};

/// Reduces a K-nonpositive integer class into the fundamental cone by
/// alternately sorting x_1..x_n and applying Phi(1,2,3) while
/// x_0 + x_1 + x_2 + x_3 < 0.  Each Phi strictly decreases x_0, so at most
/// x_0 of them are applied.
inline ReductionResult reduce(const PicClass& v) {
  const int n = v.n();
  require(n >= 3, "reduce: n must be at least 3");
  require(!v.is_zero(), "reduce: zero vector");
  require(pairing(v, canonical_class(n)) <= 0, "K-positive side not supported (v . K > 0)");

  ReductionResult result{ReductionResult::Status::InFundamentalCone, v, {}, std::nullopt, std::nullopt, {}, 0, 0};
  std::vector<Integer> x = v.vector();
  const auto w0 = Generator::phi(1, 2, 3);
  const std::size_t last = static_cast<std::size_t>(n);

  auto fail = [&](PicClass constraint, std::string description) {
    result.status = ReductionResult::Status::NotNef;
    result.reduced = PicClass(x);
    result.violated = apply_word(result.witness.inverse(), constraint);
    result.violated_at_stop = std::move(constraint);
    result.violated_description = std::move(description);
    return result;
  };

  while (true) {
    ++result.iterations;
    detail::sort_in_place(x, result.witness);
    const Integer head = x[0] + x[1] + x[2] + x[3];
    if (head >= 0 && x[last] <= 0) {
      result.reduced = PicClass(std::move(x));
      return result;
    }
    if (head >= 0) {
      // Sorted and x_0+x_1+x_2+x_3 >= 0 but x_n > 0: e_n pairs to -x_n < 0.
      return fail(PicClass::basis(n, n), "e_" + std::to_string(n) + " . v < 0");
    }
    if (x[0] <= 0) {
      // A nonzero sorted class with x_0 <= 0 outside the cone: either x_n > 0,
      // or x_0 + x_1 + x_2 < 0 (x_1 is the minimum, so all x_i <= 0 would
      // otherwise force v = 0).
      if (x[last] > 0) return fail(PicClass::basis(n, n), "e_" + std::to_string(n) + " . v < 0");
      PicClass line = PicClass::basis(n, 0) - PicClass::basis(n, 1) - PicClass::basis(n, 2);
      return fail(std::move(line), "(e_0 - e_1 - e_2) . v < 0");
    }
    detail::apply_in_place(w0, x);
    result.witness.gens.push_back(w0);
    ++result.phi_steps;
  }
}

struct OrbitLimit {
  std::optional<Integer> max_degree;
  std::optional<std::size_t> max_count;
};

struct OrbitResult {
  std::vector<PicClass> elements;  // sorted lexicographically
  bool truncated = false;          // max_count cut the closure short
  bool degree_pruned = false;      // some image exceeded max_degree
};

/// Breadth-first closure of v under every Phi(i,j,k) and Sigma(i).  Images
/// above max_degree are dropped; with max_count the search stops once that
/// many elements are collected, processing each layer in lexicographic order.
inline OrbitResult orbit(const PicClass& v, const OrbitLimit& limit) {
  require(!v.is_zero(), "orbit: zero vector");
  require(limit.max_degree.has_value() || limit.max_count.has_value(), "orbit: a finite limit is required");
  const auto gens = all_generators(v.n());

  OrbitResult result;
  std::set<PicClass> seen{v};
  std::vector<PicClass> layer{v};
  auto full = [&] { return limit.max_count && seen.size() >= *limit.max_count; };

  while (!layer.empty() && !full()) {
    std::set<PicClass> next;
    for (const auto& u : layer) {
      for (const auto& g : gens) {
        PicClass image = apply_generator(g, u);
        if (limit.max_degree && image.degree() > *limit.max_degree) {
          result.degree_pruned = true;
          continue;
        }
        if (!seen.contains(image)) next.insert(std::move(image));
      }
    }
    layer.clear();
    for (const auto& u : next) {
      if (full()) {
        result.truncated = true;
        break;
      }
      seen.insert(u);
      layer.push_back(u);
    }
  }
  if (!result.truncated && full()) {
    for (const auto& u : layer) {
      for (const auto& g : gens) {
        PicClass image = apply_generator(g, u);
        if (limit.max_degree && image.degree() > *limit.max_degree) continue;
        if (!seen.contains(image)) result.truncated = true;
      }
    }
  }
  result.elements.assign(seen.begin(), seen.end());
  return result;
}

}  // namespace cremona
