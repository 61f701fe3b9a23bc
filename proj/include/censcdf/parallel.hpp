#pragma once

#include <cstddef>
#include <functional>

namespace censcdf {

// Runs fn(i) for every i in [0, count) on up to `threads` workers. Work
// items must write only to caller-owned slots indexed by i; reductions
// belong to the caller so that results do not depend on the schedule.
// The first exception thrown by a work item is rethrown after all workers
// finish.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace censcdf
