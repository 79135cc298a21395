#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hso {

/// Splits [0, count) into `jobs` contiguous ranges and calls
/// body(begin, end, worker) on each, one thread per range. The first
/// exception thrown by any worker is rethrown after all threads join.
template <class Body>
void parallel_ranges(std::size_t count, int jobs, Body&& body) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count));
  if (workers <= 1) {
    body(std::size_t{0}, count, 0);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    threads.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, static_cast<int>(w));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// out[i] = fn(in[i]), computed across `jobs` threads; order is preserved.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& in, int jobs, Fn&& fn) {
  using R = decltype(fn(in.front()));
  std::vector<R> out(in.size());
  parallel_ranges(in.size(), jobs, [&](std::size_t b, std::size_t e, int) {
    for (std::size_t i = b; i < e; ++i) out[i] = fn(in[i]);
  });
  return out;
}

}  // namespace hso
