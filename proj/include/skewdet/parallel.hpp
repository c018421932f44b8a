#pragma once

#include <cstddef>
#include <functional>

namespace skewdet {

// jobs > 0 is taken as is; otherwise the SKEWDET_JOBS environment variable,
// then hardware_concurrency, then 1.
int resolve_jobs(int jobs);

// Runs f(i) for i in [0, count) on up to `jobs` worker threads. Exceptions
// from workers are collected and the first one rethrown.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f);

} // namespace skewdet
