#pragma once

#include <cstddef>
#include <functional>

namespace sugawara {

/// Worker count from SUGAWARA_THREADS, else the hardware concurrency; at least 1.
std::size_t worker_count();

/// Runs f(task, worker) for task in [0, count). Tasks are claimed dynamically;
/// worker ids are in [0, worker_count()). The first exception thrown by any
/// task is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t task, std::size_t worker)>& f);

}  // namespace sugawara
