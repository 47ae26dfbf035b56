#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace tropsi {

/// Worker count for parallel sweeps: TROPSI_THREADS when set, otherwise the
/// hardware concurrency, clamped to [1, task_count].
std::size_t worker_count(std::size_t task_count);

/// Runs fn(i) for i in [0, task_count) on a worker pool.  Results must be
/// written to pre-sized slots by index, so the output is deterministic
/// regardless of scheduling.  The first exception is rethrown on the caller.
void parallel_for(std::size_t task_count, const std::function<void(std::size_t)>& fn);

}  // namespace tropsi
