#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace skeinlab {

/// Worker cap: SKEINLAB_THREADS when set, else hardware concurrency.
int thread_budget();

/// Splits [0, n) into contiguous chunks and runs `fn(begin, end, chunk)` on a
/// worker per chunk.  Chunk boundaries depend only on n and the budget, so
/// callers that combine per-chunk results in chunk order are deterministic at
/// every parallelism level.
void parallel_chunks(std::int64_t n, int max_chunks,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn);

}  // namespace skeinlab
