#ifndef GRIDFREQ_PARALLEL_HPP
#define GRIDFREQ_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace gridfreq {

/// Number of worker threads: min(hardware_concurrency, GRIDFREQ_THREADS).
/// GRIDFREQ_THREADS unset or invalid -> hardware concurrency.
std::size_t thread_budget();

/// Run fn(i) for i in [0, n). Work is distributed over thread_budget()
/// threads by static index striding, so results written to preallocated
/// slots are identical for any thread count. Exceptions from workers are
/// rethrown on the calling thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace gridfreq

#endif // GRIDFREQ_PARALLEL_HPP
