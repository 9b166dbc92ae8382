#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace phynes {

// Global parallelism budget, set once by the CLI (or tests). 0 = hardware default.
void set_thread_budget(int n);
int thread_budget();

// Splits [0,n) into contiguous chunks, one per worker. The worker callback
// receives (chunk_index, begin, end). Callers that accumulate must keep
// per-chunk scratch and reduce over chunk_index in order, so results do not
// depend on scheduling.
void parallel_chunks(size_t n, const std::function<void(int, size_t, size_t)>& fn);

}  // namespace phynes
