#pragma once

#include <cstddef>
#include <functional>

namespace fivestar {

/// Number of worker threads: FIVESTAR_THREADS if set (clamped to >= 1),
/// otherwise the hardware concurrency. Cached after the first call.
int worker_count();

/// Runs body(begin, end, chunk_index) over a static partition of [0, n).
/// Chunk boundaries depend only on (n, worker_count), so any reduction that
/// combines per-chunk results in chunk order is reproducible run to run.
/// Falls back to a single inline call when n < min_parallel or one worker.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t, int)>& body,
                  std::size_t min_parallel = 4096);

} // namespace fivestar
