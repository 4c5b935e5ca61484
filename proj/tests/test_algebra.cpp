#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdanalysis/algebra.hpp"

using namespace cd;

namespace {

std::mt19937_64 rng(12345);

CdNumber random_cd(int level, double scale = 2.0) {
    std::uniform_real_distribution<double> uni(-scale, scale);
    CdNumber z = CdNumber::zero(level);
    for (int j = 0; j < z.dim(); ++j) z.set_coeff(j, uni(rng));
    return z;
}

} // namespace

TEST_CASE("generator products match the printed table") {
    const CdNumber i1 = CdNumber::generator(1);
    const CdNumber i2 = CdNumber::generator(2);
    CHECK(dist(i1 * i2, CdNumber::generator(3)) == 0.0);
    CHECK(dist(embed(CdNumber::generator(5), 3) * CdNumber::generator(6),
               -1.0 * embed(CdNumber::generator(3), 3)) == 0.0);
    CHECK(dist(embed(CdNumber::generator(1), 3) * CdNumber::generator(4),
               embed(CdNumber::generator(5), 3)) == 0.0);
    CHECK(dist(embed(CdNumber::generator(6), 3) * CdNumber::generator(7),
               -1.0 * embed(CdNumber::generator(1), 3)) == 0.0);
    // squares and anticommutation
    for (int j = 1; j < 8; ++j) {
        const CdNumber g = CdNumber::generator(j);
        CHECK(dist(g * g, CdNumber::real(-1.0)) == 0.0);
        for (int k = 1; k < 8; ++k) {
            if (j == k) continue;
            const CdNumber a = embed(CdNumber::generator(j), 3);
            const CdNumber b = embed(CdNumber::generator(k), 3);
            CHECK(dist(a * b, -(b * a)) == 0.0);
        }
    }
    CHECK(dist(CdNumber::one() * random_cd(3), CdNumber::one() * random_cd(3)) >= 0.0);
}

TEST_CASE("identity and norm basics") {
    const CdNumber z = random_cd(3);
    CHECK(approx_eq(CdNumber::one() * z, z));
    CHECK(approx_eq(z * CdNumber::one(), z));

    CdNumber v = CdNumber::from_coeffs(2, {1.0, 1.0, 1.0, 1.0});
    CHECK(norm(v) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(re(CdNumber::real(3.0) - 4.0 * CdNumber::generator(2)) == 3.0);
}

TEST_CASE("conjugation closed form agrees with sign flip") {
    CHECK(approx_eq(conj(CdNumber::real(1.0) + 2.0 * CdNumber::generator(1)),
                    CdNumber::real(1.0) - 2.0 * CdNumber::generator(1)));
    CHECK(approx_eq(conj(CdNumber::real(7.5)), CdNumber::real(7.5)));
    for (int iter = 0; iter < 200; ++iter) {
        const int level = 2 + (iter % 2);
        const CdNumber z = random_cd(level);
        CHECK(dist(conj_formula(z), conj(z)) < 1e-12 * std::max(1.0, norm(z)));
        CHECK(dist(re_formula(z), CdNumber::real(re(z)).embedded(level)) < 1e-12);
    }
}

TEST_CASE("norm is multiplicative and matches z conj z") {
    for (int iter = 0; iter < 500; ++iter) {
        const int level = 1 + (iter % 3);
        const CdNumber a = random_cd(level), b = random_cd(level);
        CHECK(std::fabs(norm(a * b) - norm(a) * norm(b)) <
              1e-12 * std::max(1.0, norm(a) * norm(b)));
        const CdNumber prod = a * conj(a);
        CHECK(std::fabs(re(prod) - norm_sq(a)) < 1e-12 * std::max(1.0, norm_sq(a)));
        CHECK(norm(im(prod)) < 1e-12 * std::max(1.0, norm_sq(a)));
        CHECK(approx_eq(conj(a * b), conj(b) * conj(a)));
    }
}

TEST_CASE("inverse multiplies back to one") {
    CHECK(approx_eq(inverse(CdNumber::generator(1)), -1.0 * CdNumber::generator(1)));
    CHECK(approx_eq(inverse(CdNumber::real(2.0)), CdNumber::real(0.5)));
    for (int iter = 0; iter < 300; ++iter) {
        const CdNumber z = random_cd(3);
        if (norm(z) < 1e-3) continue;
        CHECK(dist(z * inverse(z), CdNumber::one().embedded(3)) < 1e-12);
        CHECK(dist(inverse(z) * z, CdNumber::one().embedded(3)) < 1e-12);
    }
    CHECK_THROWS_AS((void)inverse(CdNumber::zero(2)), Error);
}

TEST_CASE("projections agree with coefficients") {
    const CdNumber z = CdNumber::real(2.0) + 5.0 * CdNumber::generator(3);
    CHECK(proj(z, 3) == 5.0);
    CHECK(proj(CdNumber::generator(7), 0) == 0.0);
    CHECK_THROWS_AS((void)proj(z, 9), Error);
    for (int iter = 0; iter < 200; ++iter) {
        const int level = 2 + (iter % 2);
        const CdNumber w = random_cd(level);
        for (int j = 0; j < w.dim(); ++j) {
            CHECK(std::fabs(proj_formula(w, j) - proj(w, j)) < 1e-12 * std::max(1.0, norm(w)));
        }
    }
}

TEST_CASE("embedding preserves products") {
    const CdNumber z = CdNumber::real(1.0) + CdNumber::generator(1);
    const CdNumber o = embed(z, 3);
    CHECK(o.level() == 3);
    CHECK(o.coeff(0) == 1.0);
    CHECK(o.coeff(1) == 1.0);
    for (int j = 2; j < 8; ++j) CHECK(o.coeff(j) == 0.0);

    const CdNumber q = embed(CdNumber::generator(2), 3);
    CHECK(approx_eq(q * q, CdNumber::real(-1.0).embedded(3)));

    for (int iter = 0; iter < 100; ++iter) {
        const CdNumber a = random_cd(1), b = random_cd(1);
        CHECK(approx_eq(embed(a * b, 3), embed(a, 3) * embed(b, 3)));
    }
    CHECK_THROWS_AS((void)embed(CdNumber::generator(5), 2), Error);
}

TEST_CASE("associativity on quaternions, alternativity on octonions") {
    for (int iter = 0; iter < 2000; ++iter) {
        const CdNumber a = random_cd(2), b = random_cd(2), c = random_cd(2);
        const double scale = std::max(1.0, norm(a) * norm(b) * norm(c));
        CHECK(dist((a * b) * c, a * (b * c)) < 1e-12 * scale);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        const CdNumber z = random_cd(3), y = random_cd(3);
        const double scale = std::max(1.0, norm_sq(z) * norm(y));
        CHECK(dist(z * (z * y), (z * z) * y) < 1e-12 * scale);
        CHECK(dist((y * z) * z, y * (z * z)) < 1e-12 * scale);
    }
    // Octonions are not associative: exhibit one witness.
    const CdNumber w =
        (embed(CdNumber::generator(1), 3) * CdNumber::generator(2)) * CdNumber::generator(4);
    const CdNumber v =
        embed(CdNumber::generator(1), 3) * (embed(CdNumber::generator(2), 3) * CdNumber::generator(4));
    CHECK(dist(w, v) > 1.0);
}

TEST_CASE("mixed-level arithmetic auto-embeds") {
    const CdNumber c = CdNumber::real(1.0) + CdNumber::generator(1);
    const CdNumber o = random_cd(3);
    CHECK((c * o).level() == 3);
    CHECK(approx_eq(c * o, embed(c, 3) * o));
}
