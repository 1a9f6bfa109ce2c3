#include "toplat/parallel.hpp"

namespace toplat {

namespace {
std::atomic<std::size_t> g_workers{1};
}  // namespace

void set_worker_count(std::size_t n) {
  if (n == 0) n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  g_workers.store(n);
}

std::size_t worker_count() { return g_workers.load(); }

}  // namespace toplat
