#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace goat {

// Worker cap: GOAT_THREADS env var, else min(hardware, 4).
inline int max_threads() {
  static int cached = [] {
    if (const char* env = std::getenv("GOAT_THREADS")) {
      int n = std::atoi(env);
      if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min<unsigned>(hw ? hw : 1, 4));
  }();
  return cached;
}

namespace detail {
inline thread_local bool in_parallel_region = false;
}

// Runs fn(begin, end) over a contiguous partition of [0, n). Each chunk is a
// contiguous index range, so callers writing disjoint outputs per index get
// bit-identical results for any thread count. Nested calls run serially.
inline void parallel_for(int64_t n, const std::function<void(int64_t, int64_t)>& fn,
                         int64_t min_grain = 1024) {
  if (n <= 0) return;
  int threads = max_threads();
  if (threads <= 1 || detail::in_parallel_region || n < 2 * min_grain) {
    fn(0, n);
    return;
  }
  int chunks = static_cast<int>(std::min<int64_t>(threads, (n + min_grain - 1) / min_grain));
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  int64_t per = (n + chunks - 1) / chunks;
  for (int c = 0; c < chunks; ++c) {
    int64_t b = c * per;
    int64_t e = std::min<int64_t>(n, b + per);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] {
      detail::in_parallel_region = true;
      fn(b, e);
      detail::in_parallel_region = false;
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace goat
