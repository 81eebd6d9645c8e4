#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace brl {

// Worker count used when the caller passes 0.
unsigned default_workers();

// Runs body(i) for i in [0, n) on up to `workers` threads with a static
// partition. Each index is visited exactly once, so writing results into
// slot i keeps output independent of the worker count. The first exception
// thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace brl
