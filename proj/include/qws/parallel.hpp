#pragma once

#include <cstddef>
#include <functional>

namespace qws {

// Thread count used for table-sized loops: QWS_THREADS if set (clamped to
// [1, 64]), otherwise the hardware concurrency.
int worker_count();

// Runs fn over [0, count) in contiguous chunks, one chunk per worker. Chunks
// write disjoint index ranges, so results are bit-identical to a sequential
// run. Small loops run inline.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace qws
