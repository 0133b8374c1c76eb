#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vpb {

// Runs fn(0..count-1). jobs <= 1 is the serial reference path; jobs > 1
// fans out with OpenMP. Callers write results into preallocated slots, so
// output order never depends on scheduling.
template <typename F>
void parallel_for(size_t count, int jobs, F&& fn) {
#ifdef _OPENMP
  if (jobs > 1 && count > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long k = 0; k < static_cast<long>(count); ++k) fn(static_cast<size_t>(k));
    return;
  }
#endif
  for (size_t k = 0; k < count; ++k) fn(k);
}

int hardware_jobs();

}  // namespace vpb
