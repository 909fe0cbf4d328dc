#pragma once

#include <cstddef>
#include <functional>

namespace tcdyn {

/// Worker count: TCDYN_THREADS when set (>= 1), else hardware concurrency.
std::size_t worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, n) on up to
/// worker_count() threads. Results must be written by index so output does
/// not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace tcdyn
