#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace toplat {

// Process-wide worker count used by exhaustive sweeps. 0 selects the
// hardware concurrency.
void set_worker_count(std::size_t n);
std::size_t worker_count();

// Runs probe(i) for i in [0, n) and returns the value produced by the
// least i whose probe yields one. Every index below the winner is fully
// evaluated, so the answer does not depend on scheduling.
template <class T, class Probe>
std::optional<T> find_first(std::size_t n, Probe&& probe) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1 || n < 32) {
    for (std::size_t i = 0; i < n; ++i)
      if (auto r = probe(i)) return r;
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  std::optional<T> result;
  std::mutex mu;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= best.load()) return;
          if (auto r = probe(i)) {
            std::lock_guard lock(mu);
            if (i < best.load()) {
              best.store(i);
              result = std::move(r);
            }
            return;
          }
        }
      });
  }
  return result;
}

}  // namespace toplat
