#pragma once

#include <cstddef>
#include <functional>

namespace sqz {

// requested <= 0 means "use the hardware concurrency".
int resolve_threads(int requested);

// Runs fn(i) for every i in [0, n), splitting the range into contiguous
// blocks, one per worker. Each index is processed exactly once and callers
// write results into per-index slots they own, so the outcome is
// independent of the thread count (byte-identical exports regardless of
// parallelism). The first exception thrown by any worker is rethrown on
// the calling thread after all workers join.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace sqz
