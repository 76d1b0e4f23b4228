#pragma once

#include <cstddef>
#include <functional>

namespace cobord::formcalc {

// Worker count from COBORD_THREADS (default: hardware concurrency, at least 1).
unsigned thread_count();

// Runs body(begin, end) over disjoint chunks of [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cobord::formcalc
