#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace akizuki {

// Applies f(i) for i in [0, n). The body must be pure per index; results go
// into caller-owned slots, so parallel and serial execution agree exactly.
template <typename F>
void parallel_for(long n, bool serial, F&& f) {
#ifdef _OPENMP
  if (!serial) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) f(i);
    return;
  }
#endif
  for (long i = 0; i < n; ++i) f(i);
}

inline int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace akizuki
