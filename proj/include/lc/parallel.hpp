#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lc {

// Execution policy for the data-parallel kernels. Every parallel kernel
// has a serial path producing bit-identical results (parallelism is only
// over disjoint output slots; per-slot reductions stay sequential).
enum class Exec { Serial, Par };

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline double wall_time() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return 0.0;
#endif
}

template <class Body>
void parallel_for(Exec mode, std::int64_t n, const Body& body) {
    if (mode == Exec::Par) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) body(i);
    } else {
        for (std::int64_t i = 0; i < n; ++i) body(i);
    }
}

// Dynamic schedule variant for loops with uneven per-item cost
// (adaptive quadrature per grid point, triangular index sets).
template <class Body>
void parallel_for_dynamic(Exec mode, std::int64_t n, const Body& body) {
    if (mode == Exec::Par) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t i = 0; i < n; ++i) body(i);
    } else {
        for (std::int64_t i = 0; i < n; ++i) body(i);
    }
}

} // namespace lc
