#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace bsglab {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Splits [0, n) into contiguous chunks, one per worker. The split depends
// only on (n, threads), so callers that write into disjoint ranges get
// deterministic results.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  int t = resolve_threads(threads);
  if (static_cast<std::size_t>(t) > n) t = static_cast<int>(n);
  if (t <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(t));
  const std::size_t chunk = n / static_cast<std::size_t>(t);
  const std::size_t extra = n % static_cast<std::size_t>(t);
  std::size_t begin = 0;
  for (int w = 0; w < t; ++w) {
    const std::size_t len = chunk + (static_cast<std::size_t>(w) < extra ? 1 : 0);
    pool.emplace_back(fn, begin, begin + len);
    begin += len;
  }
  for (auto& th : pool) th.join();
}

}  // namespace bsglab
