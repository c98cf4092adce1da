#pragma once

#include <cstdint>
#include <functional>

namespace semidyn {

// How heavy numeric passes are executed. `threads == 0` means hardware
// concurrency. Results must not depend on the thread count: workers write to
// disjoint, preallocated output ranges and reductions fold in index order.
struct ExecPolicy {
    int threads = 0;
    bool force_scalar_kernel = false;  // disable SIMD dispatch (tests, repro runs)
};

int resolve_threads(int requested);

// Splits [begin,end) into contiguous chunks, one worker per chunk.
// chunk_fn(chunk_begin, chunk_end) must only touch state owned by its range.
void parallel_for(int64_t begin, int64_t end, int threads,
                  const std::function<void(int64_t, int64_t)>& chunk_fn);

}  // namespace semidyn
