#include "cdanalysis/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cdanalysis/quadrature.hpp"
#include "cdanalysis/rotor.hpp"
#include "cdanalysis/transcend.hpp"
#include "cdanalysis/xform.hpp"

namespace cd {

namespace {

using Cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// B_{2j}/(2j)! for j = 1..5.
constexpr double kBernFact[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0,
                                -1.0 / 1209600.0, 1.0 / 47900160.0};

// Hurwitz tail sum_{k >= a} k^{-m} for integer m >= 2.
double hurwitz_tail(int m, double a) {
    const double am = std::pow(a, -static_cast<double>(m));
    double value = am * (a / (m - 1.0) + 0.5);
    double rising = m; // (m)(m+1)...(m+2j-2)
    double apow = am / a;
    for (std::size_t j = 0; j < std::size(kBernFact); ++j) {
        value += kBernFact[j] * rising * apow;
        rising *= static_cast<double>(m + 2 * j + 1) * static_cast<double>(m + 2 * j + 2);
        apow /= a * a;
    }
    return value;
}

Cplx cgamma_reciprocal(Cplx z) {
    const double az = std::abs(z);
    const int n_terms = std::max(40, static_cast<int>(std::ceil(2.0 * az)));
    Cplx prod = z * std::exp(euler_constant * z);
    for (int k = 1; k <= n_terms; ++k) {
        const Cplx w = z / static_cast<double>(k);
        prod *= (1.0 + w) * std::exp(-w);
    }
    // Tail of the log-product: sum_{k>n} [log(1+z/k) - z/k] expanded in z/k.
    Cplx tail = 0.0;
    Cplx zp = z;
    for (int m = 2; m <= 96; ++m) {
        zp *= z;
        const double sign = (m % 2 == 0) ? -1.0 : 1.0;
        const Cplx term = (sign / m) * zp * hurwitz_tail(m, n_terms + 1.0);
        tail += term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(tail))) break;
    }
    return prod * std::exp(tail);
}

Cplx cgamma(Cplx z) {
    const Cplx rec = cgamma_reciprocal(z);
    if (std::abs(rec) < 1e-290)
        raise(ErrorKind::PoleAt, "gamma pole at a nonpositive integer");
    return 1.0 / rec;
}

Cplx cdigamma1p(Cplx z) {
    const double az = std::abs(z);
    const int n_terms = std::max(40, static_cast<int>(std::ceil(2.0 * az)));
    Cplx acc = -euler_constant;
    for (int k = 1; k <= n_terms; ++k) {
        const Cplx d = z + static_cast<double>(k);
        if (std::abs(d) < 1e-290) raise(ErrorKind::PoleAt, "digamma pole");
        acc += z / (static_cast<double>(k) * d);
    }
    Cplx zp = 1.0;
    for (int m = 1; m <= 96; ++m) {
        zp *= z;
        const double sign = (m % 2 == 1) ? 1.0 : -1.0;
        const Cplx term = sign * zp * hurwitz_tail(m + 1, n_terms + 1.0);
        acc += term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(acc))) break;
    }
    return acc;
}

// Exact integral of (n + 1/2 - x) x^{-z-1} over [n, n+1].
Cplx saw_interval(double n, Cplx z) {
    const Cplx a = std::pow(Cplx(n), -z);
    const Cplx b = std::pow(Cplx(n + 1.0), -z);
    const Cplx a1 = std::pow(Cplx(n), 1.0 - z);
    const Cplx b1 = std::pow(Cplx(n + 1.0), 1.0 - z);
    return (n + 0.5) * (a - b) / z - (b1 - a1) / (1.0 - z);
}

// Euler-Maclaurin form of the remaining sawtooth integral from L upward:
// integral_L^inf ([x]-x+1/2) x^{-z-1} dx.
Cplx saw_tail(double L, Cplx z) {
    Cplx tail = 0.0;
    Cplx rising = 1.0; // (z+1)(z+2)...(z+2j-2)
    Cplx lpow = std::pow(Cplx(L), -z - 1.0);
    for (std::size_t j = 0; j < std::size(kBernFact); ++j) {
        tail += kBernFact[j] * rising * lpow;
        rising *= (z + static_cast<double>(2 * j + 1)) * (z + static_cast<double>(2 * j + 2));
        lpow /= L * L;
    }
    return tail;
}

void check_not_pole_one(Cplx z) {
    if (std::abs(z - 1.0) < 1e-12)
        raise(ErrorKind::PoleAtOne, "zeta has its pole at z = 1");
}

Cplx czeta_em(Cplx z) {
    check_not_pole_one(z);
    if (!(z.real() > -1.0 + 1e-9))
        raise(ErrorKind::DomainOfRepresentation, "sawtooth continuation needs Re z > -1");
    const int n_direct =
        std::max(20, static_cast<int>(std::ceil(2.0 * std::fabs(z.imag()))) + 10);
    const int n_saw = 16;
    Cplx sum = 0.0;
    for (int n = 1; n <= n_direct; ++n) sum += std::pow(Cplx(n), -z);
    sum += std::pow(Cplx(n_direct), 1.0 - z) / (z - 1.0) -
           0.5 * std::pow(Cplx(n_direct), -z);
    Cplx saw = 0.0;
    for (int n = n_direct; n < n_direct + n_saw; ++n)
        saw += saw_interval(static_cast<double>(n), z);
    saw += saw_tail(static_cast<double>(n_direct + n_saw), z);
    return sum + z * saw;
}

Cplx czeta_strip(Cplx z) {
    if (!(z.real() > -1.0 + 1e-9 && z.real() < -1e-9))
        raise(ErrorKind::DomainOfRepresentation, "strip form needs -1 < Re z < 0");
    const int n_saw = std::max(30, static_cast<int>(std::ceil(2.0 * std::fabs(z.imag()))) + 20);
    Cplx saw = 0.0;
    for (int n = 1; n <= n_saw; ++n) saw += saw_interval(static_cast<double>(n), z);
    saw += saw_tail(static_cast<double>(n_saw + 1), z);
    return -0.5 + z / (z - 1.0) + z * saw;
}

Cplx cchi(Cplx z) {
    return std::exp(z * std::log(2.0)) * std::exp((z - 1.0) * std::log(kPi)) *
           std::sin(kPi * z / 2.0) * cgamma(1.0 - z);
}

Cplx czeta_auto(Cplx z) {
    if (z.real() > -0.5) return czeta_em(z);
    return cchi(z) * czeta_em(1.0 - z);
}

Cplx czeta_reflected(Cplx z) {
    if (!(z.real() < -1e-9))
        raise(ErrorKind::DomainOfRepresentation, "reflected form needs Re z < 0");
    return cchi(z) * czeta_em(1.0 - z);
}

// Loop-contour pieces: rays along the positive axis with arguments 0 and
// 2 pi, and the circle |eta| = 1 (inside |eta| < 2 pi).
constexpr double kHankelRadius = 1.0;

Cplx wrap_integrate(const std::function<Cplx(double)>& f, double a, double b, double tol) {
    const RealToCd g = [&](double t) {
        CdNumber v = CdNumber::zero(1);
        const Cplx w = f(t);
        v.set_coeff(0, w.real());
        v.set_coeff(1, w.imag());
        return v;
    };
    const CdNumber r = integrate_adaptive(g, a, b, {tol, 24});
    return {re(r), r.coeff(1)};
}

Cplx hankel_ray_integral(Cplx z, double tol) {
    // integral_R^T x^{z-1} / (e^x - 1) dx with T from the integrand decay.
    const double sigma = z.real();
    const double T = 48.0 + 3.0 * std::max(0.0, sigma) * std::log(48.0);
    return wrap_integrate(
        [z](double x) { return std::pow(Cplx(x), z - 1.0) / std::expm1(x); }, kHankelRadius,
        T, tol);
}

Cplx hankel_circle_integral(Cplx z, double tol) {
    // eta = R e^{i theta}; d eta = i eta d theta; arg runs 0 -> 2 pi.
    return wrap_integrate(
        [z](double theta) {
            const Cplx log_eta(std::log(kHankelRadius), theta);
            const Cplx eta = std::exp(log_eta);
            return std::exp((z - 1.0) * log_eta) / (std::exp(eta) - 1.0) * Cplx(0.0, 1.0) *
                   eta;
        },
        0.0, kTwoPi, tol);
}

Cplx czeta_hankel(Cplx z, double tol = 1e-11) {
    check_not_pole_one(z);
    // The circle term carries Gamma(1-z) against a vanishing integral at
    // z = 2, 3, ...; keep a conditioning guard around those points.
    if (z.real() > 1.5) {
        const double nearest = std::fabs(z.imag()) +
                               std::fabs(z.real() - std::round(z.real()));
        if (nearest < 0.05 && std::round(z.real()) >= 2.0)
            raise(ErrorKind::DomainOfRepresentation,
                  "loop form is ill-conditioned at integer points >= 2");
    }
    const Cplx i(0.0, 1.0);
    const Cplx ray = hankel_ray_integral(z, tol);
    const Cplx circle = hankel_circle_integral(z, tol);
    // Gamma(1-z) (e^{2 pi i (z-1)} - 1) = -2 pi i e^{i pi (z-1)} / Gamma(z),
    // which keeps the ray part finite across the Gamma poles.
    const Cplx ray_part = cgamma_reciprocal(z) * ray;
    const Cplx circle_part =
        std::exp(-i * kPi * z) * (-i) / kTwoPi * cgamma(1.0 - z) * circle;
    return ray_part + circle_part;
}

Cplx czeta_mellin_digamma(Cplx z, double tol = 1e-11) {
    const double sigma = z.real();
    if (!(sigma > 0.02 && sigma < 0.98))
        raise(ErrorKind::DomainOfRepresentation, "digamma form kept to 0 < Re z < 1");
    const double t_neg = 40.0 / (1.0 - sigma);
    const double t_pos = 40.0 / sigma;
    const Cplx integral = wrap_integrate(
        [z](double t) {
            const Cplx psi = cdigamma1p(Cplx(std::exp(t))) - t;
            return psi * std::exp((1.0 - z) * t);
        },
        -t_neg, t_pos, tol);
    return -std::sin(kPi * z) / kPi * integral;
}

Cplx czeta(Cplx z, ZetaRep rep) {
    switch (rep) {
        case ZetaRep::euler_maclaurin: return czeta_em(z);
        case ZetaRep::strip: return czeta_strip(z);
        case ZetaRep::reflected: return czeta_reflected(z);
        case ZetaRep::hankel: return czeta_hankel(z);
        case ZetaRep::mellin_digamma: return czeta_mellin_digamma(z);
    }
    raise(ErrorKind::DomainOfRepresentation, "unknown representation");
}

Cplx cxi(Cplx z) {
    return z * (z - 1.0) * std::exp(-z / 2.0 * std::log(kPi)) * cgamma(z / 2.0) *
           czeta_auto(z) / 2.0;
}

} // namespace

CdNumber gamma_reciprocal(const CdNumber& z) {
    return lift_complex([](Cplx w) { return cgamma_reciprocal(w); }, z);
}

CdNumber gamma_fn(const CdNumber& z) {
    return lift_complex([](Cplx w) { return cgamma(w); }, z);
}

CdNumber digamma(const CdNumber& z) {
    return lift_complex([](Cplx w) { return cdigamma1p(w); }, z);
}

CdNumber zeta(const CdNumber& z, ZetaRep rep) {
    return lift_complex([rep](Cplx w) { return czeta(w, rep); }, z);
}

CdNumber zeta_auto(const CdNumber& z) {
    return lift_complex([](Cplx w) { return czeta_auto(w); }, z);
}

CdNumber zeta_rotated(const CdNumber& z, ZetaRep rep) {
    bool complex_arg = z.level() <= 1;
    if (!complex_arg) {
        complex_arg = true;
        for (int j = 2; j < z.dim(); ++j)
            if (std::fabs(z.coeff(j)) > axis_epsilon) complex_arg = false;
    }
    if (complex_arg) return zeta(z, rep);
    const CdNumber x = find_partner(z, 1);
    const RotationAutomorphism rot =
        build_rotation(z, x, RotationPair{1, std::max(2, z.level())});
    return rot.apply(zeta(embed(x, z.level()), rep));
}

std::complex<double> zeta_hankel_loop(std::complex<double> z) {
    const Cplx i(0.0, 1.0);
    const Cplx ray = hankel_ray_integral(z, 1e-12);
    const Cplx circle = hankel_circle_integral(z, 1e-12);
    return (std::exp(kTwoPi * i * (z - 1.0)) - 1.0) * ray + circle;
}

CdNumber chi_fn(const CdNumber& z) {
    return lift_complex([](Cplx w) { return cchi(w); }, z);
}

CdNumber xi_fn(const CdNumber& z) {
    return lift_complex([](Cplx w) { return cxi(w); }, z);
}

CdNumber upsilon_fn(const CdNumber& z) {
    return lift_complex([](Cplx w) { return cxi(w + 0.5); }, z);
}

double theta_psi(double x) {
    if (!(x > 0.0)) raise(ErrorKind::NonPositive, "theta series needs x > 0");
    double sum = 0.0;
    for (int n = 1;; ++n) {
        const double term = std::exp(-static_cast<double>(n) * n * kPi * x);
        sum += term;
        if (term < 1e-18) break;
    }
    return sum;
}

CdNumber omega_s(const CdNumber& p, double tol) {
    const int level = std::max(2, p.level());
    TransformSpec spec;
    spec.kernel = KernelKind::spherical;
    spec.level = level;
    spec.tol = tol;

    Original decay;
    decay.support = SupportKind::two_sided;
    decay.s0 = -0.5;
    decay.s1 = 0.5;
    decay.bound_scale = 2.0;
    decay.f = [](double t) { return CdNumber::real(std::exp(-std::fabs(t) / 2.0)); };

    Original theta;
    theta.support = SupportKind::two_sided;
    theta.s0 = -0.5;
    theta.s1 = 0.5;
    theta.bound_scale = 2.0;
    theta.f = [](double t) {
        const double a = std::fabs(t);
        const double big = a > 350.0 ? std::numeric_limits<double>::infinity()
                                     : std::exp(2.0 * a);
        return CdNumber::real(-std::exp(-a / 2.0) +
                              2.0 * std::exp(a / 2.0) * theta_psi(big));
    };

    const CdNumber w_s = -laplace_two_sided(decay, p, spec);
    const CdNumber g_s = laplace_two_sided(theta, p, spec);
    return 0.5 * (inverse(w_s) * g_s);
}

std::vector<ZeroBracket> critical_line_scan(double t_lo, double t_hi, double step,
                                            const CdNumber& axis) {
    if (!(0.0 < t_lo && t_lo < t_hi)) raise(ErrorKind::ZeroArgument, "need 0 < t_lo < t_hi");
    const CdNumber m = axis / norm(axis);
    const auto completed = [&](double t) { return proj(upsilon_fn(t * m), 0); };

    const int n = std::max(2, static_cast<int>(std::ceil((t_hi - t_lo) / step)));
    std::vector<double> values(static_cast<std::size_t>(n) + 1);
    par::parallel_for(values.size(), [&](std::size_t k) {
        values[k] = completed(t_lo + (t_hi - t_lo) * static_cast<double>(k) / n);
    });

    std::vector<ZeroBracket> out;
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (!(values[k - 1] == 0.0) && values[k - 1] * values[k] < 0.0) {
            ZeroBracket zb;
            zb.lo = t_lo + (t_hi - t_lo) * static_cast<double>(k - 1) / n;
            zb.hi = t_lo + (t_hi - t_lo) * static_cast<double>(k) / n;
            double lo = zb.lo, hi = zb.hi;
            double flo = values[k - 1];
            while (hi - lo > 1e-6) {
                const double mid = 0.5 * (lo + hi);
                const double fmid = completed(mid);
                if (flo * fmid <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fmid;
                }
            }
            zb.refined = 0.5 * (lo + hi);
            zb.zeta_abs = norm(zeta(CdNumber::real(0.5) + zb.refined * m,
                                    ZetaRep::euler_maclaurin));
            out.push_back(zb);
        }
    }
    return out;
}

std::complex<double> zeta_partial_rhs(long a, long q, std::complex<double> z) {
    const Cplx one_minus = 1.0 - z;
    Cplx rhs = (std::pow(Cplx(static_cast<double>(q)), one_minus) -
                std::pow(Cplx(static_cast<double>(a)), one_minus)) /
               one_minus;
    Cplx saw = 0.0;
    for (long n = a; n < q; ++n) saw += saw_interval(static_cast<double>(n), z);
    rhs += z * saw;
    rhs += 0.5 * (std::pow(Cplx(static_cast<double>(q)), -z) -
                  std::pow(Cplx(static_cast<double>(a)), -z));
    return rhs;
}

} // namespace cd
