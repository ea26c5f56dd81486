#pragma once

#include <cstddef>
#include <functional>

namespace cgybe {

/// Worker count for internal parallel loops: the CGYBE_THREADS environment
/// variable when it holds a positive integer, else the hardware concurrency.
unsigned worker_count();

/// Calls body(i) for every i in [0, count), spread over worker_count()
/// threads. Iterations must write to disjoint state.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cgybe
