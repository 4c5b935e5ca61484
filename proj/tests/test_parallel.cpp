#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdanalysis/contour.hpp"
#include "cdanalysis/quadrature.hpp"
#include "cdanalysis/special.hpp"
#include "cdanalysis/transcend.hpp"

using namespace cd;

namespace {

struct ModeGuard {
    par::ExecMode saved = par::default_mode();
    ~ModeGuard() { par::set_default_mode(saved); }
};

} // namespace

TEST_CASE("serial and OpenMP paths produce identical bits") {
    ModeGuard guard;

    const CdNumber y = CdNumber::real(0.2);
    const CdFunction pole = [y](const CdNumber& z) { return inverse(z - y); };
    const Path loop = Path::circle(y, 1.0, CdNumber::generator(5));

    par::set_default_mode(par::ExecMode::serial);
    const CdNumber serial = line_integral(pole, loop, 1e-11);
    par::set_default_mode(par::ExecMode::openmp);
    const CdNumber parallel = line_integral(pole, loop, 1e-11);
    CHECK(dist(serial, parallel) == 0.0);

    const RealToCd f = [](double t) {
        return std::exp(-0.3 * t) * exp_cd(t * CdNumber::generator(2));
    };
    const CdNumber s = integrate_panels(f, 0.0, 50.0, 512, par::ExecMode::serial);
    const CdNumber p = integrate_panels(f, 0.0, 50.0, 512, par::ExecMode::openmp);
    CHECK(dist(s, p) == 0.0);
}

TEST_CASE("scan results do not depend on the execution mode") {
    ModeGuard guard;
    par::set_default_mode(par::ExecMode::serial);
    const auto serial_rows = critical_line_scan(13.5, 15.0, 0.05, CdNumber::generator(1));
    par::set_default_mode(par::ExecMode::openmp);
    const auto omp_rows = critical_line_scan(13.5, 15.0, 0.05, CdNumber::generator(1));
    REQUIRE(serial_rows.size() == omp_rows.size());
    for (std::size_t k = 0; k < serial_rows.size(); ++k) {
        CHECK(serial_rows[k].refined == omp_rows[k].refined);
        CHECK(serial_rows[k].zeta_abs == omp_rows[k].zeta_abs);
    }
}

TEST_CASE("thread cap setters") {
    par::set_max_threads(2);
    CHECK(par::max_threads() >= 1);
    par::set_max_threads(0);
    CHECK(par::max_threads() >= 1);
}
