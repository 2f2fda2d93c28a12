#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctxdist {

// Execution mode for the data-parallel kernels.  Every kernel has a serial
// path that computes bit-identical results; tests compare the two and the
// bench target times them against each other.
enum class Exec { serial, parallel };

inline bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

inline int worker_count() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Apply f(i) for i in [0, n).  Iterations must be independent; the parallel
// path imposes no ordering.
template <typename F>
void for_range(Exec mode, std::ptrdiff_t n, F&& f) {
  if (mode == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
    return;
#endif
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
}

}  // namespace ctxdist
