#pragma once

#include <cstddef>
#include <functional>

namespace zzc {

/// Worker count from ZIGZAGCAT_THREADS, else the hardware concurrency (at least 1).
int thread_count();

/// Runs f(0..n-1); each index is handled exactly once, so per-index outputs stay deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace zzc
