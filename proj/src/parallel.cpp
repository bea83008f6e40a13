#include "symprod/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace symprod {

unsigned effective_workers() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("SYMPROD_THREADS");
  if (!env || !*env) return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) return hw;  // garbage: ignore the cap
  if (v == 0) return hw;
  return static_cast<unsigned>(std::min<long>(v, 256));
}

void parallel_tasks(std::uint64_t tasks, const std::function<void(std::uint64_t)>& fn) {
  if (tasks == 0) return;
  unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(effective_workers(), tasks));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < tasks; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> cursor{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto body = [&] {
    for (;;) {
      std::uint64_t i = cursor.fetch_add(1);
      if (i >= tasks) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

void parallel_ranges(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  if (total == 0) return;
  std::uint64_t workers = std::min<std::uint64_t>(effective_workers(), total);
  std::uint64_t chunks = std::min<std::uint64_t>(total, workers * 8);  // keep work balanced
  std::uint64_t step = (total + chunks - 1) / chunks;
  std::uint64_t actual = (total + step - 1) / step;
  parallel_tasks(actual, [&](std::uint64_t c) {
    std::uint64_t b = c * step;
    std::uint64_t e = std::min(total, b + step);
    fn(b, e);
  });
}

}  // namespace symprod
