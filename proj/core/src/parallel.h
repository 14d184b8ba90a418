#pragma once

#include <cstddef>
#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace nliart {

// 0 means "use the hardware concurrency".
unsigned ResolveThreads(unsigned requested);

// Calls fn(begin, end) over contiguous chunks of [0, n). Chunk boundaries
// depend only on n and the thread count, and callers write results by index,
// so output never depends on scheduling. The first exception is rethrown.
template <typename Fn>
void ParallelChunks(std::size_t n, unsigned threads, Fn&& fn) {
  threads = ResolveThreads(threads);
  if (threads <= 1 || n < 2) {
    fn(std::size_t{0}, n);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace nliart
