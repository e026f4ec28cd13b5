#pragma once

#include <cstddef>
#include <functional>

namespace artic {

/// Number of worker threads: hardware concurrency, capped by the
/// ARTIC_THREADS environment variable when set.
int worker_count();

/// Runs fn(i) for i in [0, n) across worker threads with static chunking.
/// Tasks must be independent; results should be written to per-index slots
/// so the outcome is identical regardless of thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace artic
