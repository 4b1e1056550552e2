#pragma once

#include <cstddef>
#include <functional>

namespace sheaflab {

// Worker count: SHEAFLAB_THREADS if set and positive, else hardware concurrency.
std::size_t thread_cap();

// Runs body(i) for i in [0, n) on up to thread_cap() threads. The first
// exception thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sheaflab
