#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "cremona/lattice.hpp"

namespace testing_support {

inline std::vector<std::int64_t> to_int64(const cremona::PicClass& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v.coords()) out.push_back(x.convert_to<std::int64_t>());
  return out;
}

inline cremona::PicClass from_int64(const std::vector<std::int64_t>& v) {
  std::vector<cremona::Integer> c(v.begin(), v.end());
  return cremona::PicClass(std::move(c));
}

/// (a repeated k times, b repeated l times, ...) padded with zeros to n+1.
inline cremona::PicClass runs(int n, std::initializer_list<std::pair<long long, int>> rs) {
  std::vector<cremona::Integer> x;
  for (const auto& [v, c] : rs)
    for (int k = 0; k < c; ++k) x.emplace_back(v);
  x.resize(static_cast<std::size_t>(n) + 1);
  return cremona::PicClass(std::move(x));
}

}  // namespace testing_support
