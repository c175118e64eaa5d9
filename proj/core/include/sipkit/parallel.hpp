#pragma once

#include <functional>

namespace sipkit {

/// Worker cap taken from SIPKIT_THREADS (unset or invalid: hardware
/// concurrency). Always >= 1.
int max_threads();

/// Calls body(i) for every i in [0, count), splitting the range into
/// contiguous chunks across at most max_threads() workers. `body` must only
/// write state owned by index i, so results never depend on the split.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace sipkit
