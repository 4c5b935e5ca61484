// Serial-versus-OpenMP benchmark over the data-parallel kernels, checking
// along the way that both execution modes produce identical bits.

#include <chrono>
#include <cstdio>
#include <numbers>

#include "cdanalysis/contour.hpp"
#include "cdanalysis/quadrature.hpp"
#include "cdanalysis/special.hpp"
#include "cdanalysis/transcend.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
double timed(F&& f, int reps) {
    const auto start = Clock::now();
    for (int k = 0; k < reps; ++k) f();
    return seconds_since(start) / reps;
}

} // namespace

int main() {
    using namespace cd;

    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial (s)", "openmp (s)", "match");

    // Line integral of an octonion pole around a large circle.
    {
        const CdNumber y = CdNumber::real(0.2);
        const CdFunction f = [y](const CdNumber& z) { return inverse(z - y); };
        const Path loop = Path::circle(y, 1.0, CdNumber::generator(5));
        CdNumber serial_value, omp_value;
        const double ts = timed(
            [&] {
                par::set_default_mode(par::ExecMode::serial);
                serial_value = line_integral(f, loop, 1e-12);
            },
            3);
        const double tp = timed(
            [&] {
                par::set_default_mode(par::ExecMode::openmp);
                omp_value = line_integral(f, loop, 1e-12);
            },
            3);
        std::printf("%-28s %12.6f %12.6f %9s\n", "line_integral(octonion)", ts, tp,
                    dist(serial_value, omp_value) == 0.0 ? "bitwise" : "DIFFER");
    }

    // Fixed-panel quadrature of an oscillatory transform kernel.
    {
        const RealToCd f = [](double t) {
            return std::exp(-0.5 * t) * exp_cd(t * CdNumber::generator(2));
        };
        CdNumber serial_value, omp_value;
        const double ts = timed(
            [&] { serial_value = integrate_panels(f, 0.0, 200.0, 4096, par::ExecMode::serial); },
            5);
        const double tp = timed(
            [&] { omp_value = integrate_panels(f, 0.0, 200.0, 4096, par::ExecMode::openmp); },
            5);
        std::printf("%-28s %12.6f %12.6f %9s\n", "integrate_panels(4096)", ts, tp,
                    dist(serial_value, omp_value) == 0.0 ? "bitwise" : "DIFFER");
    }

    // Critical-line sampling.
    {
        std::vector<ZeroBracket> serial_rows, omp_rows;
        const double ts = timed(
            [&] {
                par::set_default_mode(par::ExecMode::serial);
                serial_rows = critical_line_scan(13.0, 16.0, 0.02, CdNumber::generator(1));
            },
            1);
        const double tp = timed(
            [&] {
                par::set_default_mode(par::ExecMode::openmp);
                omp_rows = critical_line_scan(13.0, 16.0, 0.02, CdNumber::generator(1));
            },
            1);
        bool match = serial_rows.size() == omp_rows.size();
        for (std::size_t k = 0; match && k < serial_rows.size(); ++k) {
            match = serial_rows[k].refined == omp_rows[k].refined &&
                    serial_rows[k].zeta_abs == omp_rows[k].zeta_abs;
        }
        std::printf("%-28s %12.6f %12.6f %9s\n", "critical_line_scan", ts, tp,
                    match ? "bitwise" : "DIFFER");
    }

    par::set_default_mode(par::ExecMode::openmp);
    return 0;
}
