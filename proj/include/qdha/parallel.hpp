#pragma once

#include <cstddef>
#include <functional>

namespace qdha {

// QDHA_THREADS when set to a positive integer, otherwise the hardware concurrency.
int thread_count();
// Runs fn(0), ..., fn(n - 1) on up to thread_count() threads. Results must be written by index so
// that output order does not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qdha
