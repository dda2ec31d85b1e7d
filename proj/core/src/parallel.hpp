#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace klsym::detail {

inline unsigned effective_threads(unsigned requested) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::max(1u, std::min(requested == 0 ? hw : requested, hw));
}

// Runs fn(begin, end) on contiguous chunks of [0, n).  fn must only touch
// state owned by its chunk; results are merged by the caller in chunk order,
// so the outcome does not depend on the thread count.
template <typename Fn>
void parallel_chunks(std::uint64_t n, unsigned threads, Fn&& fn) {
  threads = effective_threads(threads);
  if (threads <= 1 || n < 2) {
    fn(0, std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::uint64_t chunk = (n + threads - 1) / threads;
  unsigned idx = 0;
  for (std::uint64_t b = 0; b < n; b += chunk, ++idx)
    pool.emplace_back([&fn, idx, b, e = std::min(b + chunk, n)] { fn(idx, b, e); });
  for (auto& t : pool) t.join();
}

}  // namespace klsym::detail
