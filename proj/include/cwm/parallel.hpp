#pragma once

#include <functional>

namespace cwm {

/// Worker count: LINKAGE_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Calls body(i) for i in [0, count) on up to thread_count() threads. The
/// exception from the lowest failing index is rethrown after all workers
/// finish.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace cwm
