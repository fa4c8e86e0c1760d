#ifndef WAVEKIN_PARALLEL_HPP_
#define WAVEKIN_PARALLEL_HPP_

#include <functional>

namespace wavekin {

/// Number of worker threads for internal parallel loops. Defaults to the
/// hardware concurrency; the WAVEKIN_THREADS environment variable caps it.
int thread_count();

/// Runs fn(i) for i in [begin, end). Iterations must be independent; each
/// index is executed by exactly one thread, so per-index results are
/// bit-identical regardless of the thread count.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace wavekin

#endif  // WAVEKIN_PARALLEL_HPP_
