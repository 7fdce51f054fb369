#pragma once

#include <cstddef>
#include <functional>

namespace foliage {

// Worker count from FOLIAGE_THREADS, defaulting to the hardware concurrency.
int worker_count();

// Calls fn(i) for i in [0, count) on up to worker_count() threads.
// fn must only write to slots owned by index i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace foliage
