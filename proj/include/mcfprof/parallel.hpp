#pragma once

#include <cstddef>
#include <functional>

namespace mcfprof {

/// Worker count: MCFPROF_THREADS when set (>= 1), else hardware concurrency.
std::size_t worker_count();

/// Calls body(i) for i in [0, count), split into contiguous chunks across
/// worker threads. Results must not depend on the split.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace mcfprof
