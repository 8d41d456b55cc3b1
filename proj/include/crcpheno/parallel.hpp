#ifndef CRCPHENO_PARALLEL_HPP
#define CRCPHENO_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crcpheno {

// Execution mode for the data-parallel kernels. Every parallel call site
// writes output slot i from iteration i only, so Parallel and Serial produce
// identical bytes; Serial is kept as the reference path for tests and the
// benchmark.
enum class ExecMode { Serial, Parallel };

template <typename Fn>
void for_each_index(std::size_t n, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
    #pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace crcpheno

#endif  // CRCPHENO_PARALLEL_HPP
