#pragma once

// Seeded generators for property runs.  All draws go through std::mt19937_64
// so a seed reproduces a run on a given standard library.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cremona/lattice.hpp"
#include "cremona/polytopes.hpp"
#include "cremona/weyl.hpp"

namespace cremona::sampling {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline PicClass random_class(Rng& rng, int n, std::int64_t lo, std::int64_t hi) {
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  for (auto& x : c) x = uniform(rng, lo, hi);
  return PicClass(std::move(c));
}

/// Uniform in the box, conditioned on v . K <= 0 and v != 0.
inline PicClass random_K_nonpositive(Rng& rng, int n, std::int64_t lo, std::int64_t hi) {
  const auto K = canonical_class(n);
  while (true) {
    auto v = random_class(rng, n, lo, hi);
    if (!v.is_zero() && pairing(v, K) <= 0) return v;
  }
}

inline Generator random_generator(Rng& rng, const std::vector<Generator>& gens) {
  return gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(gens.size()) - 1))];
}

inline WeylWord random_word(Rng& rng, const std::vector<Generator>& gens, std::size_t max_length) {
  WeylWord w;
  const auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_length)));
  for (std::size_t i = 0; i < len; ++i) w.gens.push_back(random_generator(rng, gens));
  return w;
}

/// sum c_r r over all rays with c_r in [lo, hi].  With lo >= 1 the point is
/// in the interior of the cone.
inline PicClass random_cone_point(Rng& rng, const std::vector<Ray>& rays, int n, std::int64_t lo, std::int64_t hi) {
  PicClass v = PicClass::zero(n);
  for (const auto& r : rays) v = v + Integer(uniform(rng, lo, hi)) * r.generator;
  return v;
}

/// A nonzero point of the cone with each ray picked with probability 1/2 and
/// small coefficients; boundary points are included.
inline PicClass random_sparse_cone_point(Rng& rng, const std::vector<Ray>& rays, int n, std::int64_t hi) {
  while (true) {
    PicClass v = PicClass::zero(n);
    for (const auto& r : rays)
      if (uniform(rng, 0, 1) == 1) v = v + Integer(uniform(rng, 1, hi)) * r.generator;
    if (!v.is_zero()) return v;
  }
}

inline bool within_box(const PicClass& v, std::int64_t lo, std::int64_t hi) {
  for (const auto& x : v.coords())
    if (x < lo || x > hi) return false;
  return true;
}

}  // namespace cremona::sampling
