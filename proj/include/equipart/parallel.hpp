#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace equipart {

// Worker count: EQUIPART_THREADS if set (>= 1), otherwise 1.
inline std::size_t thread_count() {
  if (const char* env = std::getenv("EQUIPART_THREADS")) {
    try {
      const auto v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// Runs task(i) for i in [0, count). Tasks write to their own slots, so the
// combined result does not depend on scheduling.
template <typename Task>
void parallel_for(std::size_t count, Task&& task) {
  const auto workers = std::min(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        try {
          for (auto i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      });
  }
  // first failure wins
  if (failure) std::rethrow_exception(failure);
}

}  // namespace equipart
