#pragma once

#include <cstdint>
#include <functional>

namespace symprod {

// Worker cap: SYMPROD_THREADS env var, 0 or unset means hardware concurrency.
unsigned effective_workers();

// Runs fn(task_index) for task_index in [0, tasks) on up to
// min(effective_workers(), tasks) threads. Callers own determinism: results
// must be combined by task index, never by completion order. Exceptions from
// fn propagate (first one wins).
void parallel_tasks(std::uint64_t tasks, const std::function<void(std::uint64_t)>& fn);

// Splits [0, total) into contiguous chunks, one task per chunk.
void parallel_ranges(std::uint64_t total,
                     const std::function<void(std::uint64_t begin, std::uint64_t end)>& fn);

}  // namespace symprod
