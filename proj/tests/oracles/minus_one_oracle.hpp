#pragma once

// Brute-force (-1)-class oracle: for d >= 1 scans -d <= x_i <= 0 (nonnegative
// multiplicities), for d = 0 scans -1 <= x_i <= 1, coordinate by coordinate,
// and keeps every vector with c^2 = -1 and c . K = -1.  Plain int64, no
// multiset reasoning, only a square-sum cutoff.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::vector<Vec> minus_one_box(int n, std::int64_t max_degree) {
  std::vector<Vec> out;
  Vec x(static_cast<std::size_t>(n) + 1);
  for (std::int64_t d = 0; d <= max_degree; ++d) {
    x[0] = d;
    const std::int64_t budget = d * d + 1;  // sum x_i^2 must equal this
    const std::int64_t lo = -std::max<std::int64_t>(d, 1);
    const std::int64_t hi = d == 0 ? 1 : 0;
    auto rec = [&](auto&& self, int i, std::int64_t sq, std::int64_t sum) -> void {
      if (i > n) {
        // c^2 = d^2 - sum x_i^2, c . K = -3d - sum x_i
        if (sq == budget && -3 * d - sum == -1) out.push_back(x);
        return;
      }
      for (std::int64_t v = lo; v <= hi; ++v) {
        if (sq + v * v > budget) continue;
        x[static_cast<std::size_t>(i)] = v;
        self(self, i + 1, sq + v * v, sum + v);
      }
      x[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 1, 0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
