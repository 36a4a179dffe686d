#pragma once

#include <cstddef>
#include <functional>

namespace bje {

/// Number of worker threads to use when the caller passes 0.
unsigned default_thread_count() noexcept;

/// Calls body(i) for i in [0, count) on up to `threads` workers (0 = default).
/// Indices are handed out in contiguous blocks; the first exception thrown by
/// any body is rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace bje
