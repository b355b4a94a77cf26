#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace cremona {

/// Worker count for sharded enumerations: $CREMONA_THREADS if set to a
/// positive integer, otherwise the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("CREMONA_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(std::min(v, 256L));
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(begin, end, shard) over contiguous shards of [0, count).  Each
/// shard writes to its own output slot; callers merge in shard order, so the
/// result does not depend on scheduling.
template <class Body>
void parallel_shards(std::size_t count, std::size_t shards, Body&& body) {
  shards = std::max<std::size_t>(1, std::min(shards, count));
  if (shards == 1) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> threads;
  threads.reserve(shards);
  const std::size_t chunk = (count + shards - 1) / shards;
  for (std::size_t s = 0; s < shards; ++s) {
    const std::size_t begin = std::min(count, s * chunk), end = std::min(count, begin + chunk);
    threads.emplace_back([&, begin, end, s] {
      try {
        body(begin, end, s);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace cremona
