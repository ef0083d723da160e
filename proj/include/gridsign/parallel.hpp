#pragma once

#include <functional>

namespace gridsign {

// Worker count from GRIDSIGN_THREADS; defaults to 1. Every operation is
// required to produce identical output regardless of this setting.
int configured_threads();

// Runs fn(0..count-1) over the configured workers. Indices are written to
// disjoint slots by the callers, so scheduling cannot affect results.
void parallel_for(long long count, const std::function<void(long long)>& fn);

}  // namespace gridsign
