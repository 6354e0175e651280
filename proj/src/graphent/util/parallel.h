#ifndef GRAPHENT_UTIL_PARALLEL_H
#define GRAPHENT_UTIL_PARALLEL_H

#include <cstddef>
#include <functional>

namespace graphent {

/// Number of worker threads for internal loops. Honors GRAPHENT_THREADS when
/// set to a positive integer, otherwise uses the hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, count). Each index is visited exactly once; the
/// caller writes results by index so output does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

}  // namespace graphent

#endif
