#include "tropsi/parallel.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace tropsi {

std::size_t worker_count(std::size_t task_count) {
  if (task_count <= 1) return task_count;
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("TROPSI_THREADS")) {
    const long requested = std::strtol(env, nullptr, 10);
    if (requested >= 1) workers = static_cast<std::size_t>(requested);
  }
  return workers < task_count ? workers : task_count;
}

void parallel_for(std::size_t task_count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = worker_count(task_count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < task_count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= task_count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tropsi
