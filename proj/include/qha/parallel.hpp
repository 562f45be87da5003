#pragma once

#include <cstddef>
#include <functional>

namespace qha {

/// Worker count: QHA_THREADS if set and > 0, otherwise hardware concurrency.
int thread_count();

/// Static-partition parallel loop over [begin, end). Each index is visited
/// exactly once; workers write to disjoint slots, so results are
/// deterministic for any thread count.
void parallel_for(std::ptrdiff_t begin, std::ptrdiff_t end,
                  const std::function<void(std::ptrdiff_t)>& body);

}  // namespace qha
