#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "cdanalysis/contour.hpp"
#include "cdanalysis/qcx.hpp"
#include "cdanalysis/rotor.hpp"
#include "cdanalysis/transcend.hpp"

using namespace cd;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
std::mt19937_64 rng(999);

CdNumber random_cd(int level, double scale = 1.5) {
    std::uniform_real_distribution<double> uni(-scale, scale);
    CdNumber z = CdNumber::zero(level);
    for (int j = 0; j < z.dim(); ++j) z.set_coeff(j, uni(rng));
    return z;
}

} // namespace

TEST_CASE("closed loops of holomorphic integrands vanish") {
    const CdFunction square = [](const CdNumber& z) { return z * z; };
    const Path loop = Path::circle(CdNumber::real(0.3), 0.8, CdNumber::generator(1));
    CHECK(norm(line_integral(square, loop, 1e-11)) < 1e-10);
}

TEST_CASE("plane pole integrates to a full turn") {
    for (int j : {1, 2, 3, 6}) {
        const int level = j <= 3 ? 2 : 3;
        const CdNumber axis = embed(CdNumber::generator(j), level);
        const CdNumber y = CdNumber::real(0.4).embedded(level);
        const CdFunction pole = [y](const CdNumber& z) { return inverse(z - y); };
        const CdNumber got = line_integral(pole, Path::circle(y, 0.7, axis), 1e-11);
        CHECK(dist(got, kTwoPi * axis) < 1e-9);
    }
}

TEST_CASE("segment integral of a constant is c times the increment") {
    const CdNumber c = random_cd(3);
    const CdNumber w = random_cd(3);
    const CdFunction constant = [c](const CdNumber&) { return c; };
    const CdNumber got =
        line_integral(constant, Path::segment(CdNumber::zero(3), w), 1e-12);
    CHECK(dist(got, c * w) < 1e-11);
    // Left order flips the factors.
    const CdNumber left =
        line_integral(constant, Path::segment(CdNumber::zero(3), w), 1e-12, MulOrder::left);
    CHECK(dist(left, w * c) < 1e-11);
}

TEST_CASE("left and right orders agree on complex restrictions") {
    const CdFunction f = [](const CdNumber& z) { return exp_cd(z) * z; };
    const Path loop = Path::circle(CdNumber::real(0.1), 1.2, CdNumber::generator(1));
    const CdNumber right = line_integral(f, loop, 1e-11, MulOrder::right);
    const CdNumber left = line_integral(f, loop, 1e-11, MulOrder::left);
    CHECK(dist(left, right) < 1e-9);
}

TEST_CASE("path concatenation is additive") {
    const CdFunction f = [](const CdNumber& z) { return z * z + CdNumber::real(1.0); };
    const CdNumber a = CdNumber::zero(2), b = random_cd(2), c = random_cd(2);
    const CdNumber direct = line_integral(f, Path::segment(a, b), 1e-12) +
                            line_integral(f, Path::segment(b, c), 1e-12);
    const CdNumber joined =
        line_integral(f, Path::concat({Path::segment(a, b), Path::segment(b, c)}), 1e-12);
    CHECK(dist(direct, joined) < 1e-10);
}

TEST_CASE("homotopic paths within a plane agree") {
    // Deformations inside one complex plane R + M R leave the integral of a
    // plane-valued holomorphic integrand unchanged.
    const CdFunction f = [](const CdNumber& z) { return exp_cd(z) + z * z; };
    const CdNumber m = CdNumber::generator(2);
    const CdNumber a = CdNumber::real(-0.5).embedded(2);
    const CdNumber b = CdNumber::real(0.5) + 0.3 * m;
    Path bent;
    bent.map = [a, b, m](double t) {
        const CdNumber straight = (1.0 - t) * a + t * b;
        return straight + (t * (1.0 - t)) * m;
    };
    const CdNumber direct = line_integral(f, Path::segment(a, b), 1e-11);
    const CdNumber curved = line_integral(f, bent, 1e-11);
    CHECK(dist(direct, curved) < 1e-9);
}

TEST_CASE("residue of the unit pole is the axis") {
    const CdNumber y = CdNumber::real(1.0);
    const CdFunction pole = [y](const CdNumber& z) { return inverse(z - y); };
    for (int j = 1; j <= 7; ++j) {
        const CdNumber axis = embed(CdNumber::generator(j), 3);
        for (double rho : {0.1, 1.0}) {
            CHECK(dist(residue(pole, y, axis, rho, 1e-10), axis) < 1e-8);
        }
    }
    // No pole, no residue.
    const CdFunction entire = [](const CdNumber& z) { return exp_cd(z); };
    CHECK(norm(residue(entire, y, CdNumber::generator(2), 0.5, 1e-11)) < 1e-10);
}

TEST_CASE("factored pole follows the bracketing of the constants") {
    const CdNumber y = CdNumber::real(0.5);
    for (int level : {2, 3}) {
        const CdNumber a = random_cd(level), b = random_cd(level);
        const CdNumber c = random_cd(level), e = random_cd(level);
        const CdFunction f = [&](const CdNumber& z) {
            return (a * ((b * inverse(z - y)) * c)) * e;
        };
        const CdNumber axis = embed(CdNumber::generator(level == 2 ? 2 : 5), level);
        const CdNumber want = (a * ((b * axis) * c)) * e;
        CHECK(dist(residue(f, y, axis, 0.4, 1e-10), want) < 1e-7 * std::max(1.0, norm(want)));
    }
}

TEST_CASE("residue transport along the zero surface") {
    // Complex seed with a pole at i, extended by partner transport.
    const ExtensionSpec seed = ExtensionSpec::callable(
        [](std::complex<double> y) { return 1.0 / (y - std::complex<double>(0.0, 1.0)); });
    const CdFunction ext = as_function(seed);
    for (int iter = 0; iter < 5; ++iter) {
        CdNumber u = random_cd(2, 1.0);
        u.set_coeff(0, 0.0);
        if (norm(u) < 1e-2) continue;
        const CdNumber z0 = u / norm(u); // point on the pole surface
        const CdNumber x = find_partner(z0, 1);
        const auto rot = build_rotation(z0, x, RotationPair{1, 2});
        const CdNumber m = rot.apply(CdNumber::generator(1).embedded(2));
        const CdNumber got = residue(ext, z0, m, 0.3, 1e-9);
        CHECK(dist(got, m) < 1e-8);
    }
}

TEST_CASE("n-residue reduces to the residue and ignores the inner coefficient") {
    const CdNumber y = CdNumber::real(0.3);
    const CdFunction pole = [y](const CdNumber& z) { return inverse(z - y); };
    const CdNumber m = CdNumber::generator(2);
    const CdNumber base = residue(pole, y, m, 1.0, 1e-10);
    CHECK(dist(residue_n(pole, y, m, 1.0, {}, 1e-9), base) < 1e-9);
    const CdNumber via_a1 = residue_n(pole, y, m, 1.0, {CdNumber::generator(1)}, 1e-9);
    CdNumber a2 = CdNumber::real(0.4) + 0.3 * CdNumber::generator(3);
    const CdNumber via_a2 = residue_n(pole, y, m, 1.0, {a2}, 1e-9);
    CHECK(dist(via_a1, base) < 1e-8);
    CHECK(dist(via_a2, base) < 1e-8);
    CHECK(dist(via_a1, via_a2) < 1e-8);
    // R-homogeneous extension in the direction argument.
    CHECK(dist(residue_n(pole, y, 2.5 * m, 1.0, {CdNumber::generator(1)}, 1e-9), 2.5 * base) <
          1e-8);
}

TEST_CASE("argument variation around the unit circle") {
    const CdFunction ident = [](const CdNumber& z) { return z; };
    for (int j : {1, 3, 5, 7}) {
        const int level = j <= 3 ? 2 : 3;
        const CdNumber axis = embed(CdNumber::generator(j), level);
        const CdNumber got =
            delta_arg_n(ident, Path::circle(CdNumber::zero(level), 1.0, axis), {}, 1e-9);
        CHECK(dist(got, kTwoPi * axis) < 1e-8);
    }
    // Nonvanishing holomorphic function on a contractible loop.
    const CdFunction f = [](const CdNumber& z) { return exp_cd(z) + CdNumber::real(3.0); };
    CHECK(norm(delta_arg_n(f, Path::circle(CdNumber::zero(2), 0.5, CdNumber::generator(1)),
                           {}, 1e-9)) < 1e-8);
    // Vanishing along the path is an error.
    const CdFunction zero_on = [](const CdNumber& z) { return z - CdNumber::real(1.0); };
    CHECK_THROWS_AS((void)delta_arg_n(zero_on,
                                      Path::circle(CdNumber::zero(2), 1.0,
                                                   CdNumber::generator(1)),
                                      {}, 1e-9),
                    Error);
}

TEST_CASE("winding counts zeros with multiplicity") {
    const CdFunction cube = [](const CdNumber& z) { return (z * z) * z; };
    const Path loop = Path::circle(CdNumber::zero(2), 1.0, CdNumber::generator(2));
    CHECK(dist(delta_arg_n(cube, loop, {}, 1e-9), 3.0 * kTwoPi * CdNumber::generator(2)) <
          1e-8);
}

TEST_CASE("dominated perturbations share the argument variation") {
    const CdFunction f2 = [](const CdNumber& z) { return (z * z) * z; };
    const CdFunction q1 = [&](const CdNumber& z) {
        return f2(z) + 0.3 * z + CdNumber::real(0.1);
    };
    const Path loop = Path::circle(CdNumber::zero(2), 1.0, CdNumber::generator(2));
    CHECK(dist(delta_arg_n(q1, loop, {}, 1e-9), delta_arg_n(f2, loop, {}, 1e-9)) < 1e-7);

    // Depth-two variation along the matching iterated-exponential loop.
    // The perturbation must stay small on the logarithmic scale for the
    // peeled stage to remain homotopic.
    const CdFunction q_gentle = [&](const CdNumber& z) {
        return f2(z) + 0.05 * z + CdNumber::real(0.02);
    };
    const CdNumber a1 = CdNumber::real(0.3) + 0.6 * CdNumber::generator(1);
    const std::vector<CdNumber> chain{a1};
    Path exp_loop;
    exp_loop.closed = true;
    exp_loop.initial_samples = 256;
    exp_loop.map = [a1](double t) {
        return exp_cd(a1 * exp_cd((kTwoPi * t) * CdNumber::generator(2)));
    };
    CHECK(dist(delta_arg_n(q_gentle, exp_loop, chain, 1e-9),
               delta_arg_n(f2, exp_loop, chain, 1e-9)) < 1e-7);
}

TEST_CASE("surface loop ratio for a conjugate zero pair") {
    // Seed y^2 + 1 extends to z^2 + 1; its zero surface through i1 is the
    // whole unit sphere of imaginaries.
    const CdFunction f = [](const CdNumber& z) { return z * z + CdNumber::real(1.0); };

    // Small complex loop around the zero i1: one full turn.
    const Path omega = Path::circle(CdNumber::generator(1), 0.05, CdNumber::generator(1));
    const CdNumber dw = delta_arg_n(f, omega, {}, 1e-9);
    CHECK(dist(dw, kTwoPi * CdNumber::generator(1)) < 1e-8);

    // Loop radii sit between e^{|Re a1|} and e^{|a1|} so the composite loop
    // stays off the zero sphere while the peeled stage still winds.
    CdNumber a1 = CdNumber::real(0.1) + 1.2 * CdNumber::generator(1);
    const ArgRatio ratio = surface_arg_ratio(f, CdNumber::generator(1).embedded(2), 2.5, 0.15,
                                             2, {a1}, 0.05, 1e-8);
    CHECK(norm(ratio.delta_omega - kTwoPi * CdNumber::generator(1)) < 1e-7);
    CHECK(norm(ratio.delta_gamma) > 1.0);
    CHECK(ratio.p_raw >= 0.9);
}
