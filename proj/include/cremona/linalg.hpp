#pragma once

// Small exact linear algebra over Q: reduced row echelon form, rank and
// nullspace of integer matrices.  Sizes here are at most a few dozen.

#include <cstddef>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/lattice.hpp"

namespace cremona::linalg {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

struct Echelon {
  RatMatrix rows;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

inline Echelon rref(const IntMatrix& m, std::size_t cols) {
  Echelon e;
  e.rows.reserve(m.size());
  for (const auto& r : m) {
    require(r.size() == cols, "rref: ragged matrix");
    e.rows.emplace_back(r.begin(), r.end());
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < e.rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < e.rows.size() && e.rows[pivot][col] == 0) ++pivot;
    if (pivot == e.rows.size()) continue;
    std::swap(e.rows[row], e.rows[pivot]);
    const Rational inv = 1 / e.rows[row][col];
    for (auto& x : e.rows[row]) x *= inv;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (r == row || e.rows[r][col] == 0) continue;
      const Rational f = e.rows[r][col];
      for (std::size_t c = col; c < cols; ++c) e.rows[r][c] -= f * e.rows[row][c];
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rows.resize(row);
  return e;
}

inline std::size_t rank(const IntMatrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

/// Basis of {x : m x = 0}, each vector primitive (content 1, sign as found).
inline IntMatrix nullspace(const IntMatrix& m, std::size_t cols) {
  const Echelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  IntMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(clear_denominators(RationalRay(std::move(v))).vector());
    basis.back() = detail::divide_content(std::move(basis.back()));
  }
  return basis;
}

}  // namespace cremona::linalg
