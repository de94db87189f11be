#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace grain {

// Runs fn(rep) for rep in [0, reps) across the given number of threads.
// Each replicate must only touch state owned by its index, so results do
// not depend on the thread count or on scheduling.
template <class Fn>
void parallel_replicates(std::size_t reps, int threads, Fn&& fn) {
  if (threads <= 1 || reps <= 1) {
    for (std::size_t i = 0; i < reps; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= reps) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::size_t nthreads =
      std::min<std::size_t>(static_cast<std::size_t>(threads), reps);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace grain
