#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thetadiv {

// Execution policy for the scan kernels. Parallel kernels reduce with
// order-free operations (min over indices, set union, final sort), so the
// result is identical for every thread count; Serial keeps the plain
// short-circuiting reference loops.
enum class Exec { Serial, Parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace thetadiv
