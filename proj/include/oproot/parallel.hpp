#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <utility>
#include <vector>

namespace oproot {

// Worker count: hardware concurrency, optionally capped by OPROOT_THREADS.
inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* s = std::getenv("OPROOT_THREADS")) {
    long cap = std::strtol(s, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
  }
  return n;
}

// Runs work(i) for i in [0, n), split into contiguous slices, one per worker.
// work(i) must write only state owned by index i, so results do not depend on
// the worker count.
template <typename F>
inline void parallel_for(std::size_t n, F&& work) {
  const std::size_t workers = worker_count();
  if (n == 0) return;
  if (workers <= 1 || n < 2 * workers) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &work] {
      for (std::size_t i = lo; i < hi; ++i) work(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace oproot
