#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace semipart {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Results must
/// be written to per-index slots so the output does not depend on the
/// thread count.
inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned workers = std::min<unsigned>(threads, std::thread::hardware_concurrency() * 4u);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

inline unsigned default_thread_count() {
  if (const char* env = std::getenv("SEMIPART_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace semipart
