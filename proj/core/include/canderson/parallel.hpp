#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace canderson {

/// Runs job(i) for i in [0, count) on up to `workers` threads. Jobs must not
/// share mutable state. If any job throws, the exception of the lowest
/// failing index is rethrown after all threads join, so the reported error
/// does not depend on scheduling.
template <typename Job>
void parallel_for(std::size_t count, int workers, Job&& job) {
  const std::size_t threads =
      std::min(static_cast<std::size_t>(std::max(workers, 1)), std::max<std::size_t>(count, 1));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(drain);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace canderson
