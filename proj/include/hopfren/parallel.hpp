#pragma once

#include <cstddef>

namespace hopfren {

// Kernel selection: OpenMP-parallel primary vs serial reference. Tests run
// both and compare; Auto means parallel when compiled with OpenMP.
enum class Parallelism { Serial, Parallel };

namespace par {

int maxThreads();

// Deterministic parallel-for: f(i) must write only to slot i of preallocated
// storage. Falls back to a plain loop without OpenMP or with mode Serial.
template <class F>
void forEach(std::size_t n, Parallelism mode, F&& f);

}  // namespace par
}  // namespace hopfren

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfren::par {

inline int maxThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class F>
void forEach(std::size_t n, Parallelism mode, F&& f) {
#ifdef _OPENMP
  if (mode == Parallelism::Parallel) {
    #pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) f(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace hopfren::par
