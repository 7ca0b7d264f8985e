#pragma once

#include <cstddef>
#include <functional>

namespace isophase {

/// ISO_PHASE_WORKERS when set to a positive integer, else the hardware
/// concurrency (at least 1).
std::size_t default_workers();

/// Splits [0, count) into contiguous blocks and runs body(begin, end, block)
/// on up to `workers` threads. Blocks are numbered in index order, so callers
/// that merge per-block results by block number get a schedule-independent
/// result. Exceptions from any block are rethrown on the calling thread.
void parallel_blocks(std::size_t count, std::size_t workers, std::size_t blocks,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

} // namespace isophase
