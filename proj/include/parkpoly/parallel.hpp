#pragma once

#include <functional>

#include "parkpoly/rational.hpp"

namespace parkpoly {

/// Worker count: PARKPOLY_THREADS when set and positive, else all cores.
int thread_count();

/// Sum of term(i) for i in [begin, end), evaluated on worker threads in
/// contiguous chunks and reduced in chunk order. The result is independent
/// of the thread count.
Integer parallel_sum(long begin, long end, const std::function<Integer(long)>& term);

}  // namespace parkpoly
