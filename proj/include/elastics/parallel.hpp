#pragma once

#include <cstddef>
#include <functional>

namespace elastics {

/// Worker count: ELASTICS_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Calls body(i) for i in [0, count) on up to thread_count() threads. The
/// first exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace elastics
