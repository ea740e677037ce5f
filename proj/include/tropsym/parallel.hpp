#pragma once

#include <cstddef>
#include <functional>

namespace tropsym {

/// Worker count: TROPSYM_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. body must
/// only touch state owned by index i or by the calling thread slot.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t index,
                                           std::size_t worker)>& body);

}  // namespace tropsym
