#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "cdanalysis/contour.hpp"
#include "cdanalysis/special.hpp"
#include "cdanalysis/transcend.hpp"

using namespace cd;

namespace {

constexpr double kPi = std::numbers::pi;
std::mt19937_64 rng(4040);

} // namespace

TEST_CASE("gamma basics") {
    CHECK(dist(gamma_fn(CdNumber::one()), CdNumber::one()) < 1e-13);
    CHECK(dist(gamma_fn(CdNumber::real(5.0)), CdNumber::real(24.0)) < 1e-11);
    CHECK(dist(gamma_fn(CdNumber::real(0.5)), CdNumber::real(std::sqrt(kPi))) < 1e-13);
    CHECK_THROWS_AS((void)gamma_fn(CdNumber::real(-3.0)), Error);

    // Reciprocal has no zeros on a probe grid over the quaternions.
    std::uniform_real_distribution<double> uni(-4.0, 4.0);
    for (int iter = 0; iter < 200; ++iter) {
        CdNumber z = CdNumber::zero(2);
        for (int j = 0; j < 4; ++j) z.set_coeff(j, uni(rng));
        CHECK(norm(gamma_reciprocal(z)) > 1e-12);
    }

    // Functional identity Gamma(z+1) = z Gamma(z) on quaternions.
    for (int iter = 0; iter < 50; ++iter) {
        CdNumber z = CdNumber::zero(2);
        z.set_coeff(0, 0.3 + std::fabs(uni(rng)));
        z.set_coeff(2, uni(rng));
        CHECK(dist(gamma_fn(z + CdNumber::one()), z * gamma_fn(z)) <
              1e-10 * std::max(1.0, norm(gamma_fn(z)) * norm(z)));
    }
}

TEST_CASE("gamma pole residues via the contour operator") {
    const CdFunction g = [](const CdNumber& z) { return gamma_fn(z); };
    double factorial = 1.0;
    for (int n = 0; n <= 5; ++n) {
        if (n > 0) factorial *= n;
        const double want = (n % 2 == 0 ? 1.0 : -1.0) / factorial;
        const CdNumber got = residue(g, CdNumber::real(-double(n)), CdNumber::generator(1),
                                     0.4, 1e-9);
        CHECK(dist(got, want * CdNumber::generator(1)) < 1e-7);
    }
}

TEST_CASE("digamma values and asymptotics") {
    CHECK(dist(digamma(CdNumber::zero(1)), CdNumber::real(-euler_constant)) < 1e-13);
    CHECK(dist(digamma(CdNumber::one()), CdNumber::real(1.0 - euler_constant)) < 1e-13);
    // psi(1+x) - ln x -> 0 for growing x.
    double prev = 1.0;
    for (double x : {5.0, 20.0, 80.0, 320.0}) {
        const double gap =
            norm(digamma(CdNumber::real(x)) - CdNumber::real(std::log(x)));
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 2e-3);
    CHECK_THROWS_AS((void)digamma(CdNumber::real(-2.0)), Error);
}

TEST_CASE("zeta representation values") {
    // Direct-summation oracle for zeta(2): 10^7 terms plus integral tail.
    double oracle = 0.0;
    for (long n = 10000000; n >= 1; --n) oracle += 1.0 / (double(n) * double(n));
    oracle += 1e-7 - 0.5e-14;
    CHECK(std::fabs(re(zeta(CdNumber::real(2.0), ZetaRep::euler_maclaurin)) - oracle) < 1e-8);
    CHECK(std::fabs(oracle - kPi * kPi / 6.0) < 1e-12); // the frozen closed form

    CHECK(std::fabs(re(zeta(CdNumber::real(3.0), ZetaRep::euler_maclaurin)) -
                    1.2020569031595943) < 1e-12);
    CHECK_THROWS_AS((void)zeta(CdNumber::one(), ZetaRep::euler_maclaurin), Error);

    // Cross-representation agreement.
    for (double s : {0.25, 0.5, 0.75}) {
        const CdNumber z = CdNumber::real(s) + 0.7 * CdNumber::generator(1);
        CHECK(dist(zeta(z, ZetaRep::euler_maclaurin), zeta(z, ZetaRep::mellin_digamma)) <
              1e-6);
    }
    for (double s : {1.6, 2.4}) {
        const CdNumber z = CdNumber::real(s) + 0.4 * CdNumber::generator(2);
        CHECK(dist(zeta(z, ZetaRep::euler_maclaurin), zeta(z, ZetaRep::hankel)) < 1e-6);
    }
    {
        const CdNumber z = CdNumber::real(-0.5) + 0.6 * CdNumber::generator(1);
        CHECK(dist(zeta(z, ZetaRep::euler_maclaurin), zeta(z, ZetaRep::strip)) < 1e-10);
        CHECK(dist(zeta(z, ZetaRep::euler_maclaurin), zeta(z, ZetaRep::reflected)) < 1e-8);
    }

    // The loop integral vanishes at 2 and 3.
    CHECK(std::abs(zeta_hankel_loop({2.0, 0.0})) < 1e-8);
    CHECK(std::abs(zeta_hankel_loop({3.0, 0.0})) < 1e-8);
}

TEST_CASE("zeta residue at the pole") {
    const CdFunction f = [](const CdNumber& z) {
        return zeta(z, ZetaRep::euler_maclaurin);
    };
    CHECK(dist(residue(f, CdNumber::one(), CdNumber::generator(1), 0.4, 1e-9),
               CdNumber::generator(1)) < 1e-7);
}

TEST_CASE("functional equation and companions") {
    std::uniform_real_distribution<double> sig(0.1, 0.9);
    std::uniform_real_distribution<double> tt(-6.0, 6.0);
    for (int iter = 0; iter < 30; ++iter) {
        CdNumber z;
        if (iter % 2 == 0) {
            z = CdNumber::zero(1);
            z.set_coeff(0, sig(rng));
            z.set_coeff(1, tt(rng));
        } else {
            const int level = 2 + iter % 2;
            CdNumber axis = CdNumber::zero(level);
            axis.set_coeff(2, 0.6);
            axis.set_coeff(level == 2 ? 3 : 5, 0.8);
            z = CdNumber::real(sig(rng)).embedded(level) + std::fabs(tt(rng)) * axis;
        }
        const CdNumber lhs = zeta(z, ZetaRep::euler_maclaurin);
        const CdNumber one = CdNumber::one().embedded(z.level());
        const CdNumber rhs = chi_fn(z) * zeta(one - z, ZetaRep::euler_maclaurin);
        CHECK(dist(lhs, rhs) < 1e-6);

        CHECK(dist(chi_fn(z) * chi_fn(one - z), one) < 1e-8);
        const CdNumber u = upsilon_fn(z);
        CHECK(dist(u, upsilon_fn(-z)) < 1e-8);
        CHECK(dist(conj(u), upsilon_fn(conj(z))) < 1e-8);
    }
}

TEST_CASE("quaternionic slice evaluation equals the rotated transport") {
    std::uniform_real_distribution<double> sig(0.2, 0.8);
    std::uniform_real_distribution<double> tt(0.5, 6.0);
    for (int iter = 0; iter < 20; ++iter) {
        const int level = 2 + iter % 2;
        CdNumber u = CdNumber::zero(level);
        for (int j = 1; j < u.dim(); ++j)
            u.set_coeff(j, std::uniform_real_distribution<double>(-1.0, 1.0)(rng));
        if (norm(u) < 1e-2) continue;
        const CdNumber z = CdNumber::real(sig(rng)).embedded(level) + (tt(rng) / norm(u)) * u;
        CHECK(dist(zeta_auto(z), zeta_rotated(z, ZetaRep::euler_maclaurin)) < 1e-10);
    }
}

TEST_CASE("theta modular identity") {
    for (double x : {1.0 / 3.0, 1.0, 3.0}) {
        const double lhs = 2.0 * theta_psi(x) + 1.0;
        const double rhs = (2.0 * theta_psi(1.0 / x) + 1.0) / std::sqrt(x);
        CHECK(std::fabs(lhs - rhs) < 1e-12);
    }
    CHECK(std::fabs(theta_psi(10.0) - std::exp(-10.0 * kPi)) <
          1e-30); // one-term dominance
    CHECK_THROWS_AS((void)theta_psi(0.0), Error);
    CHECK_THROWS_AS((void)theta_psi(-1.0), Error);
}

TEST_CASE("completed transform agrees with xi on the complex slice") {
    for (double q : {0.0, 0.2, -0.3}) {
        for (double v : {0.0, 1.1}) {
            CdNumber p = CdNumber::zero(1);
            p.set_coeff(0, q);
            p.set_coeff(1, v);
            const CdNumber got = omega_s(p, 1e-9);
            const CdNumber want = xi_fn(p + CdNumber::real(0.5));
            CHECK(dist(got, want) < 1e-6 * std::max(1.0, norm(want)));
        }
    }
}

TEST_CASE("completed transform symmetries on quaternions") {
    std::uniform_real_distribution<double> uni(-0.3, 0.3);
    for (int iter = 0; iter < 4; ++iter) {
        CdNumber p = CdNumber::zero(2);
        p.set_coeff(0, uni(rng));
        p.set_coeff(1, uni(rng));
        p.set_coeff(2, 0.4 + std::fabs(uni(rng)));
        p.set_coeff(3, uni(rng));
        const CdNumber a = omega_s(p, 1e-9);
        CHECK(dist(omega_s(-p, 1e-9), a) < 1e-7 * std::max(1.0, norm(a)));
        CdNumber flipped = p;
        flipped.set_coeff(1, -p.coeff(1));
        CHECK(dist(omega_s(flipped, 1e-9), conj(a)) < 1e-7 * std::max(1.0, norm(a)));
    }
}

TEST_CASE("critical-line scan brackets the first zeros") {
    const auto rows = critical_line_scan(12.0, 26.5, 0.05, CdNumber::generator(1));
    REQUIRE(rows.size() >= 3);
    CHECK(rows[0].lo > 14.0);
    CHECK(rows[0].hi < 15.0);
    CHECK(std::fabs(rows[0].refined - 14.134725) < 1e-4);
    CHECK(std::fabs(rows[1].refined - 21.022040) < 1e-4);
    CHECK(std::fabs(rows[2].refined - 25.010858) < 1e-4);
    for (const auto& row : rows) CHECK(row.zeta_abs < 1e-4);

    CHECK(critical_line_scan(0.5, 5.0, 0.05, CdNumber::generator(1)).empty());

    const auto other = critical_line_scan(12.0, 26.5, 0.05, CdNumber::generator(3));
    REQUIRE(other.size() >= 3);
    for (int k = 0; k < 3; ++k)
        CHECK(std::fabs(rows[k].refined - other[k].refined) < 1e-6);
}

TEST_CASE("finite partial sums match the closed identity") {
    std::uniform_real_distribution<double> sig(-0.8, 2.0);
    std::uniform_real_distribution<double> tt(-5.0, 5.0);
    for (int iter = 0; iter < 20; ++iter) {
        const std::complex<double> z(sig(rng), tt(rng));
        if (std::abs(z - 1.0) < 0.05) continue;
        const long a = 3, q = 40;
        std::complex<double> direct = 0.0;
        for (long n = a + 1; n <= q; ++n) direct += std::pow(std::complex<double>(n), -z);
        CHECK(std::abs(direct - zeta_partial_rhs(a, q, z)) < 1e-11);
    }
}
