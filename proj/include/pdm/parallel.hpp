#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pdm {

// Thread-count resolution: explicit request > REPGAP_THREADS > hardware.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("REPGAP_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Static partition of [begin, end) into one contiguous chunk per worker.
// Workers write to disjoint slots only, so results never depend on the
// thread count.
inline void parallel_for(long begin, long end, int threads,
                         const std::function<void(long, long)>& chunk) {
  long len = end - begin;
  if (len <= 0) return;
  int t = std::max(1, threads);
  t = static_cast<int>(std::min<long>(t, len));
  if (t == 1) {
    chunk(begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int i = 0; i < t; ++i) {
    long lo = begin + len * i / t;
    long hi = begin + len * (i + 1) / t;
    pool.emplace_back(chunk, lo, hi);
  }
  for (auto& th : pool) th.join();
}

}  // namespace pdm
