#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gcl {

/// Runs body(i) for i in [0, n). threads <= 1 is the serial reference path;
/// larger values fan out via OpenMP. Results must be written to per-index
/// slots so the outcome is schedule-independent.
template <typename F>
void parallel_for(std::size_t n, int threads, F&& body) {
#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)threads;
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace gcl
