#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ftlab {

// Every sweep kernel writes per-index results into preallocated slots, so a
// parallel run is bit-identical to the serial reference.  Exec::Serial is
// the reference path kept for testing and benchmarking.
enum class Exec { Serial, Parallel };

void parallel_for(Exec exec, int n, const std::function<void(int)>& body);

// Fixed-order pairwise tree summation: the reduction result does not depend
// on the thread count because it runs over the stored slots in one thread.
double pairwise_sum(const std::vector<double>& x);

}  // namespace ftlab
