#pragma once

#include <cstddef>
#include <functional>

namespace domiperf {

/// DOMIPERF_WORKERS if set to a positive integer, else hardware concurrency (at least 1).
int worker_count();

/// Calls body(i) for every i in [0, count), spread over `workers` threads.
/// Each index runs exactly once; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, int workers = worker_count());

}  // namespace domiperf
