#pragma once

namespace workbench {

/// Thread count for parallel kernels: WORKBENCH_THREADS if set and positive,
/// otherwise the OpenMP default.
int worker_threads();

}  // namespace workbench
