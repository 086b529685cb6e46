#pragma once

// Deterministic work sharing. Results are collected per index and reduced in
// index order, so the output is independent of the thread count.

#include <functional>
#include <thread>
#include <vector>

namespace hpz {

inline int effective_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

// Apply fn(i) for i in [0, count). fn must only write to its own slot.
inline void parallel_for(long count, const std::function<void(long)>& fn,
                         int threads = 0) {
  int t = effective_threads(threads);
  if (t <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<long> next{0};
  for (int w = 0; w < t; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        long i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hpz
