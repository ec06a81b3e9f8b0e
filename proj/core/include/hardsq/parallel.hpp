#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hardsq {

// Thread count from HARDSQ_THREADS, or 1 when unset or unparsable. "auto"
// selects std::thread::hardware_concurrency().
unsigned threads_from_environment();

// Runs body(begin, end) over contiguous chunks of [0, count). Each index is
// owned by exactly one chunk, so callers that only write to their own range
// get results independent of the thread count.
template <class Body>
void parallel_for(std::uint64_t count, unsigned threads, Body&& body) {
  constexpr std::uint64_t kMinChunk = 1024;
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, (count + kMinChunk - 1) / kMinChunk));
  if (workers <= 1) {
    body(std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(count, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace hardsq
