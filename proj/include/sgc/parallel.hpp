#pragma once

#include <cstddef>
#include <functional>

namespace sgc {

// Worker count: SGC_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned thread_budget();

// Runs body(i) for i in [0, count) on up to thread_budget() threads. Each
// index is visited exactly once; the call returns after all finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace sgc
