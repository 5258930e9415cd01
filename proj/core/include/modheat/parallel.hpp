// Deterministic data-parallel loops. Workers write disjoint output slots, so
// results do not depend on the thread count. MODHEAT_THREADS caps the pool.
#pragma once

#include <cstddef>
#include <functional>

namespace modheat {

std::size_t worker_count();

// Calls body(i) for i in [0, count). Chunks are assigned statically.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace modheat
