#pragma once

#include <cstddef>
#include <functional>

namespace qhmet {

/// Worker count: QHMET_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls body(i) for i in [0, n) on up to worker_count() threads. Indices are
/// claimed dynamically; callers write results by index, so the outcome does
/// not depend on scheduling. The first exception thrown by a body is
/// rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qhmet
