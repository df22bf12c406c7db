#pragma once

#include <cstddef>
#include <functional>

namespace permsplit {

/// Worker threads to use: PERMSPLIT_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
int worker_count();

/// Runs body(i) for i in [0, count) across worker threads with dynamic
/// scheduling. The first exception thrown by any task is rethrown. Nested
/// calls from inside a worker run serially.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace permsplit
