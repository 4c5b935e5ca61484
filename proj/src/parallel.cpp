#include "cdanalysis/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cd::par {

namespace {

std::atomic<ExecMode> g_mode{
#ifdef _OPENMP
    ExecMode::openmp
#else
    ExecMode::serial
#endif
};

int env_thread_cap() {
    const char* env = std::getenv("CDANALYSIS_THREADS");
    if (!env) return 0;
    const int n = std::atoi(env);
    return n > 0 ? n : 0;
}

std::atomic<int> g_threads{env_thread_cap()};

} // namespace

ExecMode default_mode() { return g_mode.load(); }
void set_default_mode(ExecMode mode) { g_mode.store(mode); }

int max_threads() {
    const int cap = g_threads.load();
#ifdef _OPENMP
    const int hw = omp_get_max_threads();
    return cap > 0 ? std::min(cap, hw) : hw;
#else
    return cap > 0 ? cap : 1;
#endif
}

void set_max_threads(int n) { g_threads.store(n > 0 ? n : 0); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f,
                  ExecMode mode) {
#ifdef _OPENMP
    if (mode == ExecMode::openmp && n > 1) {
        const int threads = max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            f(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

CdNumber ordered_sum(const std::vector<CdNumber>& values) {
    CdNumber acc;
    for (const CdNumber& v : values) acc += v;
    return acc;
}

double ordered_sum(const std::vector<double>& values) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
}

CdNumber map_sum(std::size_t n, const std::function<CdNumber(std::size_t)>& f,
                 ExecMode mode) {
    std::vector<CdNumber> values(n);
    parallel_for(n, [&](std::size_t i) { values[i] = f(i); }, mode);
    return ordered_sum(values);
}

} // namespace cd::par
