#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "cdanalysis/transcend.hpp"

using namespace cd;

namespace {

constexpr double kPi = std::numbers::pi;
std::mt19937_64 rng(777);

CdNumber random_cd(int level, double scale = 2.0) {
    std::uniform_real_distribution<double> uni(-scale, scale);
    CdNumber z = CdNumber::zero(level);
    for (int j = 0; j < z.dim(); ++j) z.set_coeff(j, uni(rng));
    return z;
}

CdNumber random_unit_imaginary(int level) {
    for (;;) {
        CdNumber z = random_cd(level, 1.0);
        z.set_coeff(0, 0.0);
        if (norm(z) > 1e-3) return z / norm(z);
    }
}

} // namespace

TEST_CASE("exponential basics") {
    CHECK(approx_eq(exp_cd(kPi * CdNumber::generator(1)), CdNumber::real(-1.0)));
    const CdNumber m = random_unit_imaginary(3);
    CHECK(dist(exp_cd((kPi / 2.0) * m), m) < 1e-14);
    // exp(1 + pi i2) = -e: the two factors split.
    const CdNumber z = CdNumber::real(1.0) + kPi * CdNumber::generator(2);
    CHECK(dist(exp_cd(z), CdNumber::real(-std::numbers::e).embedded(2)) < 1e-14);
    CHECK(approx_eq(exp_cd(CdNumber::zero(3)), CdNumber::one().embedded(3)));
}

TEST_CASE("exp restricted to a plane matches complex exp") {
    for (int iter = 0; iter < 200; ++iter) {
        const CdNumber m = random_unit_imaginary(2 + iter % 2);
        std::uniform_real_distribution<double> uni(-2.0, 2.0);
        const double x = uni(rng), y = uni(rng);
        const std::complex<double> w = std::exp(std::complex<double>(x, y));
        const CdNumber got = exp_cd(CdNumber::real(x) + y * m);
        CHECK(dist(got, from_plane(w, m)) < 1e-12 * std::max(1.0, std::abs(w)));
    }
}

TEST_CASE("polar form and logarithm") {
    const PolarForm pf = polar(2.0 * CdNumber::generator(2));
    CHECK(pf.modulus == doctest::Approx(2.0));
    CHECK(dist(pf.axis, CdNumber::generator(2)) < 1e-15);
    CHECK(pf.angle == doctest::Approx(kPi / 2.0));
    CHECK(pf.branch == 0);

    CHECK(norm(ln_cd(CdNumber::one(), 0)) < 1e-15);
    CHECK_THROWS_AS((void)polar(CdNumber::zero(2)), Error);
    CHECK_THROWS_AS((void)ln_cd(CdNumber::zero(2), 0), Error);

    // Negative reals take the i1 axis by convention.
    const CdNumber lneg = ln_cd(CdNumber::real(-2.0), 0);
    CHECK(dist(lneg, CdNumber::real(std::log(2.0)) + kPi * CdNumber::generator(1)) < 1e-14);

    for (int iter = 0; iter < 1000; ++iter) {
        const CdNumber z = random_cd(3);
        if (norm(z) < 1e-3) continue;
        CHECK(dist(exp_cd(ln_cd(z, 0)), z) < 1e-10 * std::max(1.0, norm(z)));
    }
}

TEST_CASE("logarithm branches differ by whole turns") {
    for (int iter = 0; iter < 100; ++iter) {
        const CdNumber z = random_cd(2);
        if (norm(im(z)) < 1e-2) continue;
        const CdNumber base = ln_cd(z, 0);
        for (long n : {-2L, 1L, 5L}) {
            const CdNumber shifted = ln_cd(z, n);
            CHECK(dist(shifted - base, (2.0 * kPi * n) * axis_of(z)) < 1e-12);
            CHECK(dist(exp_cd(shifted), z) < 1e-9 * std::max(1.0, norm(z)));
        }
    }
}

TEST_CASE("powers") {
    CHECK(dist(power(CdNumber::real(4.0), CdNumber::real(0.5)), CdNumber::real(2.0)) < 1e-14);
    CHECK(dist(power(CdNumber::generator(1), CdNumber::real(2.0)), CdNumber::real(-1.0)) <
          1e-14);
    CHECK(dist(power(CdNumber::real(std::numbers::e), kPi * CdNumber::generator(2)),
               CdNumber::real(-1.0).embedded(2)) < 1e-13);
}

TEST_CASE("iterated exponential compositions invert") {
    // exp_1 reduces to exp, and the inner argument of exp_2 collapses at 0.
    const CdNumber z = random_cd(2);
    CHECK(approx_eq(exp_n({CdNumber::one()}, z), exp_cd(z)));
    const CdNumber a1 = random_cd(2), a2 = random_cd(2);
    CHECK(approx_eq(exp_n({a1, a2}, CdNumber::zero(2)), exp_cd(a1)));

    std::uniform_real_distribution<double> small(-0.6, 0.6);
    for (int iter = 0; iter < 200; ++iter) {
        const double a = small(rng);
        if (std::fabs(a) < 0.05) continue;
        CdNumber w = CdNumber::zero(1);
        w.set_coeff(0, small(rng));
        w.set_coeff(1, small(rng));
        const CdNumber za = CdNumber::real(a);
        CHECK(dist(ln_n({za}, exp_n({za}, w)), w) < 1e-11);
    }
    // Two- and three-stage round-trips on principal-domain points.
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<CdNumber> a;
        for (int k = 0; k < 3; ++k) {
            CdNumber c = 0.3 * random_unit_imaginary(2) + CdNumber::real(0.8);
            a.push_back(c);
        }
        CdNumber w = 0.2 * random_cd(2, 1.0);
        const CdNumber two = ln_n({a[0], a[1]}, exp_n({a[0], a[1]}, w));
        CHECK(dist(two, w) < 1e-9);
        const CdNumber three = ln_n(a, exp_n(a, w));
        CHECK(dist(three, w) < 1e-8);
    }
}

TEST_CASE("spherical coordinates round-trip") {
    const SphericalCoords sc = to_spherical(embed(CdNumber::generator(1), 2));
    CHECK(sc.radius == doctest::Approx(1.0));
    CHECK(sc.theta[0] == doctest::Approx(kPi / 2.0));
    CHECK(sc.theta[1] == doctest::Approx(0.0));
    CHECK(sc.theta[2] == doctest::Approx(0.0));

    CHECK(dist(axis_from_angles({}, 2), CdNumber::generator(1).embedded(2)) < 1e-15);

    for (int iter = 0; iter < 1000; ++iter) {
        const int level = 1 + (iter % 3);
        const CdNumber z = random_cd(level);
        if (norm(z) < 1e-3) continue;
        const SphericalCoords coords = to_spherical(z);
        CHECK(dist(from_spherical(coords), z) < 1e-10 * std::max(1.0, norm(z)));
        CHECK(coords.theta[0] >= 0.0);
        CHECK(coords.theta[0] <= 2.0 * kPi);
        for (std::size_t j = 1; j < coords.theta.size(); ++j) {
            CHECK(coords.theta[j] >= 0.0);
            CHECK(coords.theta[j] <= kPi);
        }
    }

    // The axis map hits every generator direction with the right angles.
    const CdNumber axis = axis_from_angles({kPi / 2.0, 0.0}, 2);
    CHECK(dist(axis, CdNumber::generator(2).embedded(2)) < 1e-15);
    CHECK_THROWS_AS((void)to_spherical(CdNumber::zero(2)), Error);
}

TEST_CASE("nested exponential map and its inverse") {
    // E fixes the complex line.
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    for (int iter = 0; iter < 100; ++iter) {
        CdNumber y = CdNumber::zero(2 + iter % 2);
        y.set_coeff(0, uni(rng));
        y.set_coeff(1, uni(rng));
        CHECK(dist(iterated_e(y), y) < 1e-15 * std::max(1.0, norm(y)));
    }

    // E2((0,1,pi/2,0)) follows the generator table down to i2.
    CdNumber p = CdNumber::zero(2);
    p.set_coeff(1, 1.0);
    p.set_coeff(2, kPi / 2.0);
    CHECK(dist(iterated_e(p), CdNumber::generator(2).embedded(2)) < 1e-15);

    std::uniform_real_distribution<double> ang(0.1, kPi - 0.1);
    std::uniform_real_distribution<double> lastang(-kPi + 0.1, kPi - 0.1);
    std::uniform_real_distribution<double> mag(0.1, 3.0);
    for (int iter = 0; iter < 500; ++iter) {
        const int level = 2 + (iter % 2);
        CdNumber q = CdNumber::zero(level);
        q.set_coeff(0, uni(rng));
        q.set_coeff(1, mag(rng));
        for (int j = 2; j < q.dim() - 1; ++j) q.set_coeff(j, ang(rng));
        q.set_coeff(q.dim() - 1, lastang(rng));
        CHECK(dist(iterated_e_inv(iterated_e(q), level), q) < 1e-10);
    }

    // Degenerate middle angle leaves deeper axes undetermined.
    CdNumber degenerate = CdNumber::zero(3);
    degenerate.set_coeff(1, 1.0);
    CHECK_THROWS_AS((void)iterated_e_inv(iterated_e(degenerate), 3), Error);
}

TEST_CASE("iterated quaternion exponential expands to the spherical form") {
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    for (int iter = 0; iter < 200; ++iter) {
        const double a = uni(rng), b = uni(rng), c = uni(rng);
        const CdNumber i1 = CdNumber::generator(1).embedded(2);
        const CdNumber i2 = CdNumber::generator(2).embedded(2);
        const CdNumber i3 = CdNumber::generator(3).embedded(2);
        const CdNumber lhs = exp_cd(a * (i1 * exp_cd(-b * (i3 * exp_cd(-c * i1)))));
        const CdNumber rhs = CdNumber::real(std::cos(a)) +
                             std::sin(a) * std::cos(b) * i1 +
                             std::sin(a) * std::sin(b) * std::cos(c) * i2 +
                             std::sin(a) * std::sin(b) * std::sin(c) * i3;
        CHECK(dist(lhs, rhs) < 1e-13);
    }
}
