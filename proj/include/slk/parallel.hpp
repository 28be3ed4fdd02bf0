#pragma once

#include <cstddef>
#include <functional>

namespace slk {

/// Value of SPATIAL_LINKING_JOBS, or 1. Never reads other entropy sources.
int default_jobs();

/// Run fn(chunk_id, begin, end) over a fixed contiguous partition of
/// [0, count) on `jobs` threads. The partition depends only on (count, jobs),
/// so per-chunk results combined in chunk order are reproducible; integer
/// sums and maxima are reproducible regardless of combine order.
void run_chunked(std::size_t count, int jobs,
                 const std::function<void(int, std::size_t, std::size_t)>& fn);

} // namespace slk
