#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sigmaforge::detail {

/// Calls fn(i) for i in [0, count) on up to `jobs` threads. Work items must
/// write to disjoint outputs; the first exception thrown is rethrown.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& fn)
{
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t)
    threads.emplace_back(body);
  body();
  for (auto& t : threads)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

} // namespace sigmaforge::detail
