#pragma once

#include <cstddef>
#include <functional>

namespace sforge {

/// Worker count: STEENROD_FORGE_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t configured_threads();

/// Runs body(0) .. body(n-1), spread over configured_threads() workers. The
/// first exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sforge
