#include "cdanalysis/qcx.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "cdanalysis/transcend.hpp"

namespace cd {

namespace {

constexpr int kMaxSeriesTerms = 100000;

std::complex<double> polynomial_sum(const std::vector<double>& coeffs, std::complex<double> w) {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
    return acc;
}

bool effectively_complex(const CdNumber& z) {
    if (z.level() <= 1) return true;
    for (int j = 2; j < z.dim(); ++j) {
        if (std::fabs(z.coeff(j)) > axis_epsilon) return false;
    }
    return true;
}

CdNumber from_complex(std::complex<double> w) {
    CdNumber z = CdNumber::zero(1);
    z.set_coeff(0, w.real());
    z.set_coeff(1, w.imag());
    return z;
}

} // namespace

ExtensionSpec ExtensionSpec::power_series(std::vector<double> coeffs, double center,
                                          double radius, int level, bool spherical) {
    ExtensionSpec s;
    s.kind_ = Kind::power_series;
    s.coeffs_ = std::move(coeffs);
    s.center_ = center;
    s.radius_ = radius;
    s.level_ = level;
    s.spherical_ = spherical;
    return s;
}

ExtensionSpec ExtensionSpec::exp_sum(std::vector<double> coeffs, std::vector<double> rates,
                                     double center, int level, bool spherical) {
    if (coeffs.size() != rates.size())
        raise(ErrorKind::ZeroArgument, "exp_sum needs matching coefficient and rate counts");
    ExtensionSpec s;
    s.kind_ = Kind::exp_sum;
    s.coeffs_ = std::move(coeffs);
    s.rates_ = std::move(rates);
    s.center_ = center;
    s.radius_ = std::numeric_limits<double>::infinity();
    s.level_ = level;
    s.spherical_ = spherical;
    return s;
}

ExtensionSpec ExtensionSpec::callable(ComplexFunction f, double center, int level,
                                      bool spherical) {
    ExtensionSpec s;
    s.kind_ = Kind::callable;
    s.fn_ = std::move(f);
    s.center_ = center;
    s.radius_ = std::numeric_limits<double>::infinity();
    s.level_ = level;
    s.spherical_ = spherical;
    return s;
}

std::complex<double> ExtensionSpec::seed(std::complex<double> y) const {
    switch (kind_) {
        case Kind::power_series:
            return polynomial_sum(coeffs_, y - center_);
        case Kind::exp_sum: {
            std::complex<double> acc = 0.0;
            for (std::size_t n = 0; n < coeffs_.size(); ++n)
                acc += coeffs_[n] * std::exp(rates_[n] * (y - center_));
            return acc;
        }
        case Kind::callable:
            return fn_(y);
    }
    raise(ErrorKind::EvaluationFailure, "unknown seed kind");
}

CdNumber eval_extension(const ExtensionSpec& spec, const CdNumber& z) {
    CdNumber arg = z;
    if (spec.spherical() && z.level() >= 2 && !effectively_complex(z)) {
        // Spherical-coordinate extension: route the point through the nested
        // exponential chart; on the complex line the chart is the identity.
        const CdNumber y0 = CdNumber::real(spec.center());
        arg = y0 + iterated_e(embed(z - y0, std::max(2, z.level())));
    }
    if (spec.kind() == ExtensionSpec::Kind::power_series &&
        !(norm(arg - CdNumber::real(spec.center())) < spec.radius()))
        raise(ErrorKind::OutOfDomain, "point outside the declared series radius");

    if (effectively_complex(arg)) {
        const std::complex<double> v = spec.seed({re(arg), arg.coeff(1)});
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            raise(ErrorKind::SeedSingularity, "seed undefined at the complex argument");
        return from_complex(v);
    }

    const int b = std::max(2, arg.level());
    const CdNumber y0 = CdNumber::real(spec.center());
    const CdNumber x = find_partner(arg, 1);
    const std::complex<double> gx = spec.seed({re(x), x.coeff(1)});
    if (!std::isfinite(gx.real()) || !std::isfinite(gx.imag()))
        raise(ErrorKind::SeedSingularity, "seed undefined at the partner point");
    const RotationAutomorphism rot =
        build_rotation(arg - y0, x - y0, RotationPair{1, b});
    return rot.apply(from_complex(gx));
}

CdNumber eval_series_direct(const ExtensionSpec& spec, const CdNumber& z) {
    if (spec.kind() != ExtensionSpec::Kind::power_series)
        raise(ErrorKind::OutOfDomain, "direct summation needs a power-series seed");
    const CdNumber w = z - CdNumber::real(spec.center());
    if (!(norm(w) < spec.radius()))
        raise(ErrorKind::DivergenceRadius, "point outside the series radius");
    CdNumber acc = CdNumber::zero(z.level());
    CdNumber w_pow = CdNumber::one().embedded(z.level());
    const auto& c = spec.coeffs();
    const std::size_t cap = std::min(c.size(), static_cast<std::size_t>(kMaxSeriesTerms));
    int tiny_streak = 0;
    for (std::size_t n = 0; n < cap; ++n) {
        const CdNumber term = c[n] * w_pow;
        acc += term;
        w_pow *= w;
        // Once several consecutive terms fall below resolution the remainder
        // cannot move the sum inside the radius.
        tiny_streak = norm(term) < 1e-16 * norm(acc) ? tiny_streak + 1 : 0;
        if (tiny_streak >= 4) break;
    }
    return acc;
}

std::vector<CdNumber> zero_surface(const CdNumber& z0, double y0, int n_samples, int level) {
    (void)y0; // the (1,b) orbit is a sphere about the real axis for any real marked point
    const int b = std::max(std::max(2, level), z0.level());
    const CdNumber v = im(embed(z0, b));
    const double radius = norm(v);
    std::vector<CdNumber> out;
    if (radius < axis_epsilon) {
        out.push_back(z0);
        return out;
    }
    std::mt19937_64 rng(0x5eedULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    out.reserve(static_cast<std::size_t>(n_samples));
    while (out.size() < static_cast<std::size_t>(n_samples)) {
        CdNumber u = CdNumber::zero(b);
        for (int j = 1; j < u.dim(); ++j) u.set_coeff(j, gauss(rng));
        const double n = norm(u);
        if (n < 1e-6) continue;
        out.push_back(CdNumber::real(re(z0)).embedded(b) + (radius / n) * u);
    }
    // Keep the seed zero itself in the sample for direct checks.
    out[0] = embed(z0, b);
    return out;
}

namespace {

CdNumber central_diff(const CdFunction& f, const CdNumber& at, const CdNumber& dir,
                      double step) {
    if (step <= 0.0) raise(ErrorKind::StepUnderflow, "finite-difference step underflow");
    return (f(at + step * dir) - f(at - step * dir)) / (2.0 * step);
}

} // namespace

PseudoConformalReport check_pseudo_conformal(const CdFunction& f, const CdNumber& xi,
                                             int n_dirs, double step) {
    const int b = std::max(2, xi.level());
    const double h = step * std::max(1.0, norm(xi));
    if (h <= 0.0) raise(ErrorKind::StepUnderflow, "finite-difference step underflow");

    std::vector<CdNumber> dirs;
    for (int j = 1; j < (1 << b); ++j) dirs.push_back(embed(CdNumber::generator(j), b));
    std::mt19937_64 rng(0xd1f5ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(dirs.size()) < n_dirs) {
        CdNumber u = CdNumber::zero(b);
        for (int j = 1; j < u.dim(); ++j) u.set_coeff(j, gauss(rng));
        const double n = norm(u);
        if (n > 1e-6) dirs.push_back(u / n);
    }

    PseudoConformalReport report;
    const CdNumber fx = central_diff(f, xi, CdNumber::one().embedded(b), h);
    for (const CdNumber& m : dirs) {
        const CdNumber fy = central_diff(f, xi, m, h);
        report.antiholomorphy = std::max(report.antiholomorphy, norm(0.5 * (fx + m * fy)));
    }

    std::vector<CdNumber> full_dirs = dirs;
    full_dirs.push_back(CdNumber::one().embedded(b));
    report.min_gain = std::numeric_limits<double>::infinity();
    std::vector<CdNumber> grads;
    for (const CdNumber& hdir : full_dirs) {
        const CdNumber g = central_diff(f, xi, hdir, h);
        grads.push_back(g);
        report.min_gain = std::min(report.min_gain, norm(g));
    }
    for (std::size_t i = 0; i < full_dirs.size(); ++i) {
        for (std::size_t j = i + 1; j < full_dirs.size(); ++j) {
            const CdNumber& g1 = grads[i];
            const CdNumber& g2 = grads[j];
            const double lhs = re(g1 * conj(g2));
            const double rhs = norm(g1) * norm(g2) * re(full_dirs[i] * conj(full_dirs[j]));
            const double scale = std::max(1.0, norm(g1) * norm(g2));
            report.angle_defect = std::max(report.angle_defect, std::fabs(lhs - rhs) / scale);
        }
    }
    return report;
}

double check_q7(const ExtensionSpec& spec, const CdNumber& z, const CdNumber& y,
                const CdNumber& h, double step) {
    if (norm(h) == 0.0) return 0.0;
    const int b = std::max(2, z.level());
    const CdNumber y0 = CdNumber::real(spec.center());
    const RotationAutomorphism rot = build_rotation(z - y0, y - y0, RotationPair{1, b});
    const CdNumber rh = rot.apply(embed(h, b));
    const double s = step * std::max(1.0, norm(z));

    const CdNumber lhs =
        central_diff([&](const CdNumber& w) { return eval_extension(spec, w); }, z, rh, s);

    const std::complex<double> yc{re(y), y.coeff(1)};
    const std::complex<double> hc{re(h), h.coeff(1)};
    const std::complex<double> gprime =
        (spec.seed(yc + s * hc) - spec.seed(yc - s * hc)) / (2.0 * s);
    const CdNumber rhs = rot.apply(from_complex(gprime));
    return norm(lhs - rhs);
}

ExtensionSpec compose_extensions(const ExtensionSpec& outer, const ExtensionSpec& inner) {
    ExtensionSpec in = inner;
    ExtensionSpec out = outer;
    return ExtensionSpec::callable(
        [in, out](std::complex<double> y) { return out.seed(in.seed(y)); }, inner.center(),
        std::max(outer.level(), inner.level()), inner.spherical());
}

ExtensionSpec product_extension(const ExtensionSpec& f1, const ExtensionSpec& f2) {
    if (f1.center() != f2.center())
        raise(ErrorKind::OutOfDomain, "product extension requires a common marked point");
    const int level = std::max(f1.level(), f2.level());
    if (f1.kind() == ExtensionSpec::Kind::power_series &&
        f2.kind() == ExtensionSpec::Kind::power_series) {
        const auto& a = f1.coeffs();
        const auto& b = f2.coeffs();
        std::vector<double> c(a.size() + b.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return ExtensionSpec::power_series(std::move(c), f1.center(),
                                           std::min(f1.radius(), f2.radius()), level,
                                           f1.spherical());
    }
    if (f1.kind() == ExtensionSpec::Kind::exp_sum && f2.kind() == ExtensionSpec::Kind::exp_sum) {
        std::vector<double> c, r;
        for (std::size_t i = 0; i < f1.coeffs().size(); ++i) {
            for (std::size_t j = 0; j < f2.coeffs().size(); ++j) {
                c.push_back(f1.coeffs()[i] * f2.coeffs()[j]);
                r.push_back(f1.rates()[i] + f2.rates()[j]);
            }
        }
        return ExtensionSpec::exp_sum(std::move(c), std::move(r), f1.center(), level,
                                      f1.spherical());
    }
    ExtensionSpec s1 = f1;
    ExtensionSpec s2 = f2;
    return ExtensionSpec::callable(
        [s1, s2](std::complex<double> y) { return s1.seed(y) * s2.seed(y); }, f1.center(),
        level, f1.spherical());
}

CdFunction as_function(const ExtensionSpec& spec) {
    ExtensionSpec s = spec;
    return [s](const CdNumber& z) { return eval_extension(s, z); };
}

} // namespace cd
