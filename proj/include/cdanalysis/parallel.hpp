#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cdanalysis/algebra.hpp"

namespace cd::par {

enum class ExecMode {
    serial,  // reference implementation, plain loop
    openmp,  // OpenMP over fixed-size chunks
};

/// Process-wide default; initialized from CDANALYSIS_THREADS (0 or unset
/// keeps the OpenMP default). Thread count never changes results: work is
/// split into fixed chunks and reduced in index order.
ExecMode default_mode();
void set_default_mode(ExecMode mode);

int max_threads();
void set_max_threads(int n);

/// Evaluates f(i) for i in [0, n). Results must be written by f into
/// caller-owned storage indexed by i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f,
                  ExecMode mode);
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    parallel_for(n, f, default_mode());
}

/// Ordered sum of a coefficient table; the reduction order is fixed by index
/// regardless of thread count.
CdNumber ordered_sum(const std::vector<CdNumber>& values);
double ordered_sum(const std::vector<double>& values);

/// Fills values[i] = f(i) under the given mode, then reduces in index order.
CdNumber map_sum(std::size_t n, const std::function<CdNumber(std::size_t)>& f,
                 ExecMode mode);
inline CdNumber map_sum(std::size_t n, const std::function<CdNumber(std::size_t)>& f) {
    return map_sum(n, f, default_mode());
}

} // namespace cd::par
