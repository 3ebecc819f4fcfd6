#pragma once

#include <functional>

namespace sdelab {

// Run fn(i) for i in [0, count) across up to `threads` workers. Work is
// partitioned statically by index, so writers keyed by index never race and
// results do not depend on the thread count.
void parallel_for(long count, int threads, const std::function<void(long)>& fn);

} // namespace sdelab
