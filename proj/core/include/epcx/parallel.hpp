#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace epcx {

/// Worker count: std::thread::hardware_concurrency(), capped by the
/// EPCX_THREADS environment variable when it holds a positive integer.
[[nodiscard]] inline std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EPCX_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0) n = std::min(n, static_cast<std::size_t>(cap));
    } catch (...) {
      // Malformed values leave the default in place.
    }
  }
  return n;
}

/// Calls fn(k) for k in [0, n), splitting the range into contiguous blocks,
/// one per worker. Callers must only write state owned by index k; every
/// reduction in the library is done afterwards, sequentially, in index
/// order, so results do not depend on the worker count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t min_per_worker = 64) {
  const std::size_t workers = std::min(worker_count(), n / std::max<std::size_t>(1, min_per_worker));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t block = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * block;
    const std::size_t hi = std::min(n, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t k = lo; k < hi; ++k) fn(k);
    });
  }
}

}  // namespace epcx
