#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fullerene {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(worker_id) on `threads` workers (0 = hardware concurrency) and
/// rethrows the first exception raised by any of them.
template <class Body>
void run_workers(int threads, Body&& body) {
  const int count = resolve_threads(threads);
  if (count == 1) {
    body(0);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (int w = 0; w < count; ++w) {
    pool.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// Calls fn(i) for every i in [0, count), distributing indices dynamically.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  run_workers(std::min<int>(resolve_threads(threads), static_cast<int>(std::max<std::size_t>(count, 1))),
              [&](int) {
                for (std::size_t i = next++; i < count; i = next++) fn(i);
              });
}

}  // namespace fullerene
