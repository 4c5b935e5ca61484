#include "cdanalysis/xform.hpp"

#include <cmath>
#include <numbers>

#include "cdanalysis/quadrature.hpp"
#include "cdanalysis/transcend.hpp"

namespace cd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kStripMargin = 1e-9;

double tail_cut(double decay_rate, double scale, double tol) {
    // C exp(-rate * T) < tol/10 determines the truncation point.
    if (!(decay_rate > 0.0)) raise(ErrorKind::DomainOfConvergence, "no exponential tail decay");
    const double target = std::log(std::max(scale, 1e-300) * 10.0 / tol);
    return std::max(4.0, target / decay_rate);
}

} // namespace

double Original::check_growth(int samples) const {
    double worst = 0.0;
    if (support == SupportKind::multiplicative) {
        for (int k = 1; k <= samples; ++k) {
            const double tau_small = static_cast<double>(k) / samples;
            const double tau_big = 1.0 + 40.0 * static_cast<double>(k) / samples;
            worst = std::max(worst,
                             norm(f(tau_small)) / (bound_scale * std::pow(tau_small, s0)));
            worst = std::max(worst, norm(f(tau_big)) / (bound_scale * std::pow(tau_big, -s1)));
        }
        return worst;
    }
    for (int k = 0; k <= samples; ++k) {
        const double t = 40.0 * static_cast<double>(k) / samples;
        worst = std::max(worst, norm(f(t)) / (bound_scale * std::exp(s0 * t)));
        if (support == SupportKind::two_sided)
            worst = std::max(worst, norm(f(-t)) / (bound_scale * std::exp(s1 * t)));
    }
    return worst;
}

CdNumber TransformSpec::basis_generator(int j) const {
    if (j == 0) return CdNumber::one().embedded(level);
    if (!basis.empty()) {
        if (j - 1 >= static_cast<int>(basis.size()))
            raise(ErrorKind::IndexOutOfRange, "basis image missing");
        return embed(basis[static_cast<std::size_t>(j - 1)], level);
    }
    return embed(CdNumber::generator(j), level);
}

namespace {

// p expressed through the spec's generator basis: sum p_j N_j.
CdNumber in_basis(const TransformSpec& spec, const CdNumber& p) {
    if (spec.basis.empty()) return embed(p, spec.level);
    CdNumber out = CdNumber::real(re(p)).embedded(spec.level);
    for (int j = 1; j < p.dim(); ++j) out += p.coeff(j) * spec.basis_generator(j);
    return out;
}

} // namespace

CdNumber TransformSpec::exponent(const CdNumber& p, double t) const {
    const CdNumber lin = in_basis(*this, p) * t + in_basis(*this, shift);
    if (kernel == KernelKind::linear) return lin;
    if (level < 2) raise(ErrorKind::LevelMismatch, "spherical kernel needs level 2 or 3");
    return iterated_e(embed(lin, level));
}

CdNumber TransformSpec::exponent_neg(const CdNumber& p, double t) const {
    const CdNumber lin = in_basis(*this, -p) * t - in_basis(*this, shift);
    if (kernel == KernelKind::linear) return lin;
    if (level < 2) raise(ErrorKind::LevelMismatch, "spherical kernel needs level 2 or 3");
    return iterated_e(embed(lin, level));
}

CdNumber laplace(const Original& orig, const CdNumber& p, const TransformSpec& spec) {
    if (!(re(p) > orig.s0 + kStripMargin))
        raise(ErrorKind::DomainOfConvergence, "Re p must exceed the growth exponent");
    const double T = tail_cut(re(p) - orig.s0, orig.bound_scale, spec.tol);
    const RealToCd integrand = [&](double t) {
        return orig.f(t) * exp_cd(-spec.exponent(p, t));
    };
    return integrate_adaptive(integrand, 0.0, T, {spec.tol, 24});
}

CdNumber laplace_two_sided(const Original& orig, const CdNumber& p, const TransformSpec& spec) {
    if (orig.s1 <= orig.s0) raise(ErrorKind::EmptyStrip, "two-sided strip is empty");
    if (!(re(p) > orig.s0 + kStripMargin && re(p) < orig.s1 - kStripMargin))
        raise(ErrorKind::DomainOfConvergence, "Re p outside the convergence strip");
    const double t_pos = tail_cut(re(p) - orig.s0, orig.bound_scale, spec.tol);
    const double t_neg = tail_cut(orig.s1 - re(p), orig.bound_scale, spec.tol);
    const RealToCd pos = [&](double t) { return orig.f(t) * exp_cd(-spec.exponent(p, t)); };
    const RealToCd neg = [&](double t) { return orig.f(-t) * exp_cd(-spec.exponent_neg(p, t)); };
    // Split at zero; the reflected half uses u(p,-t;q) = u(-p,t;q).
    return integrate_adaptive(pos, 0.0, t_pos, {spec.tol * 0.5, 24}) +
           integrate_adaptive(neg, 0.0, t_neg, {spec.tol * 0.5, 24});
}

CdNumber mellin(const Original& orig, const CdNumber& p, const TransformSpec& spec) {
    if (orig.support != SupportKind::multiplicative)
        raise(ErrorKind::OutOfDomain, "Mellin transform needs a multiplicative original");
    Original log_pulled;
    log_pulled.f = [&orig](double t) { return orig.f(std::exp(t)); };
    log_pulled.s0 = -orig.s1;
    log_pulled.s1 = -orig.s0;
    log_pulled.support = SupportKind::two_sided;
    log_pulled.bound_scale = orig.bound_scale;
    // M(g; p) is the two-sided transform evaluated at -p with shift -q.
    TransformSpec flipped = spec;
    flipped.shift = -spec.shift;
    return laplace_two_sided(log_pulled, -p, flipped);
}

CdNumber transform(const Original& orig, const CdNumber& p, const TransformSpec& spec) {
    switch (orig.support) {
        case SupportKind::right_sided: return laplace(orig, p, spec);
        case SupportKind::two_sided: return laplace_two_sided(orig, p, spec);
        case SupportKind::multiplicative: return mellin(orig, p, spec);
    }
    raise(ErrorKind::EvaluationFailure, "unknown support kind");
}

namespace {

// One pass of the inversion line integral over [-B, B], fixed parallel
// panels sized to the oscillation of exp(u(p, t)).
CdNumber line_pass(const std::function<CdNumber(double)>& node, double B, double t) {
    const double panel = std::min(1.0, std::numbers::pi / (2.0 * std::max(1.0, std::fabs(t))));
    const int panels = std::max(8, static_cast<int>(std::ceil(2.0 * B / panel)));
    return integrate_panels(node, -B, B, panels);
}

// Euler transform of the oscillating tail: partial integrals at half-period
// shifted truncations, averaged pairwise.
CdNumber euler_averaged(const std::function<CdNumber(double)>& node, double B, double t,
                        const CdNumber& base) {
    if (std::fabs(t) < 1e-9) return base;
    const double delta = std::numbers::pi / std::fabs(t);
    const int levels = 8;
    std::vector<CdNumber> partials(levels + 1);
    partials[0] = base;
    const double panel = std::min(1.0, std::numbers::pi / (2.0 * std::max(1.0, std::fabs(t))));
    for (int m = 1; m <= levels; ++m) {
        const double lo = B + (m - 1) * delta;
        const double hi = B + m * delta;
        const int panels = std::max(2, static_cast<int>(std::ceil(delta / panel)));
        const CdNumber ring = integrate_panels(node, lo, hi, panels) +
                              integrate_panels(node, -hi, -lo, panels);
        partials[m] = partials[m - 1] + ring;
    }
    for (int round = 0; round < levels; ++round) {
        for (int m = 0; m + 1 <= levels - round; ++m)
            partials[m] = 0.5 * (partials[m] + partials[m + 1]);
    }
    return partials[0];
}

CdNumber bromwich_integral(const std::function<CdNumber(double)>& node, double t,
                           const BromwichLine& line, double tol) {
    double B = std::max(4.0, line.truncation);
    const double cap = B * static_cast<double>(1 << 16);
    CdNumber prev = euler_averaged(node, B, t, line_pass(node, B, t));
    while (2.0 * B <= cap) {
        B *= 2.0;
        const CdNumber cur = euler_averaged(node, B, t, line_pass(node, B, t));
        if (dist(cur, prev) < 0.1 * tol) return cur;
        prev = cur;
    }
    raise(ErrorKind::TruncationTooSmall,
          "Bromwich truncation kept contributing past the doubling cap");
}

} // namespace

CdNumber invert(const CdFunction& image, double t, const BromwichLine& line,
                const TransformSpec& spec) {
    const CdNumber n1 = spec.basis_generator(1);
    CdNumber s = embed(line.direction, spec.level);
    const double sn = norm(s);
    if (sn == 0.0 || std::fabs(re(s)) > 1e-12)
        raise(ErrorKind::ZeroArgument, "line direction must be unit purely imaginary");
    s = s / sn;

    double pref_scale = 0.0;
    for (int j = 0; j < s.dim(); ++j) pref_scale += s.coeff(j) * n1.coeff(j); // Re(S conj(N1))
    if (spec.kernel == KernelKind::linear) {
        if (std::fabs(pref_scale) < 1.0 - 1e-9)
            raise(ErrorKind::OutOfDomain, "linear-kernel inversion requires S aligned with N1");
    } else if (std::fabs(pref_scale) < 1e-9) {
        raise(ErrorKind::OutOfDomain, "inversion prefactor vanishes for S orthogonal to N1");
    }
    const CdNumber prefactor = pref_scale * inverse(kTwoPi * n1);

    const int dim = 1 << spec.level;
    const CdNumber anchor = CdNumber::real(line.anchor).embedded(spec.level);
    const auto node = [&](double tau) {
        const CdNumber p = anchor + tau * s;
        const CdNumber fp = image(p);
        const CdNumber kernel = exp_cd(spec.exponent(p, t));
        const CdNumber ks = kernel * s; // exp(u) dp with dp = S d tau
        CdNumber acc;
        for (int j = 0; j < dim; ++j) {
            const double comp = fp.coeff(j);
            if (comp != 0.0) acc += comp * (ks * spec.basis_generator(j));
        }
        return acc;
    };
    return prefactor * bromwich_integral(node, t, line, spec.tol);
}

CdNumber invert_mellin(const CdFunction& image, double tau, const BromwichLine& line,
                       const TransformSpec& spec) {
    if (!(tau > 0.0)) raise(ErrorKind::NonPositive, "Mellin inversion needs tau > 0");
    const double t = std::log(tau);
    const CdNumber n1 = spec.basis_generator(1);
    CdNumber s = embed(line.direction, spec.level);
    const double sn = norm(s);
    if (sn == 0.0) raise(ErrorKind::ZeroArgument, "line direction must be nonzero");
    s = s / sn;
    double pref_scale = 0.0;
    for (int j = 0; j < s.dim(); ++j) pref_scale += s.coeff(j) * n1.coeff(j);
    if (spec.kernel == KernelKind::linear && std::fabs(pref_scale) < 1.0 - 1e-9)
        raise(ErrorKind::OutOfDomain, "linear-kernel inversion requires S aligned with N1");
    const CdNumber prefactor = pref_scale * inverse(kTwoPi * n1);

    const int dim = 1 << spec.level;
    const CdNumber anchor = CdNumber::real(line.anchor).embedded(spec.level);
    const auto node = [&](double x) {
        const CdNumber p = anchor + x * s;
        const CdNumber fp = image(p);
        const CdNumber kernel = exp_cd(spec.exponent_neg(p, t));
        const CdNumber ks = kernel * s;
        CdNumber acc;
        for (int j = 0; j < dim; ++j) {
            const double comp = fp.coeff(j);
            if (comp != 0.0) acc += comp * (ks * spec.basis_generator(j));
        }
        return acc;
    };
    return prefactor * bromwich_integral(node, t, line, spec.tol);
}

double diff_under_integral_check(const Original& orig, const CdNumber& p, const CdNumber& h,
                                 const TransformSpec& spec, double step) {
    if (norm(h) == 0.0) return 0.0;
    if (spec.kernel != KernelKind::linear)
        raise(ErrorKind::OutOfDomain, "derivative check is defined for the linear kernel");
    const double s = step * std::max(1.0, norm(p));
    if (s <= 0.0) raise(ErrorKind::StepUnderflow, "finite-difference step underflow");
    const CdNumber fd =
        (transform(orig, p + s * h, spec) - transform(orig, p - s * h, spec)) / (2.0 * s);

    const double T = tail_cut(re(p) - orig.s0, orig.bound_scale * (1.0 + re(p) - orig.s0), spec.tol);
    const RealToCd integrand = [&](double t) {
        return (-t) * (orig.f(t) * (exp_cd(-spec.exponent(p, t)) * h));
    };
    CdNumber quad = integrate_adaptive(integrand, 0.0, T, {spec.tol, 24});
    if (orig.support == SupportKind::two_sided) {
        const double Tn = tail_cut(orig.s1 - re(p), orig.bound_scale * (1.0 + orig.s1 - re(p)),
                                   spec.tol);
        const RealToCd negside = [&](double t) {
            return t * (orig.f(-t) * (exp_cd(-spec.exponent_neg(p, t)) * h));
        };
        quad += integrate_adaptive(negside, 0.0, Tn, {spec.tol, 24});
    }
    return norm(fd - quad);
}

SymmetryReport symmetry_report(const CdFunction& image, const std::vector<CdNumber>& probes,
                               const TransformSpec& spec) {
    SymmetryReport rep;
    for (const CdNumber& p : probes) {
        const CdNumber fp = image(p);
        rep.conj_sym = std::max(rep.conj_sym, dist(image(conj(p)), conj(fp)));
        rep.even_sym = std::max(rep.even_sym, dist(image(-p), fp));
        CdNumber flipped = embed(p, spec.level);
        flipped.set_coeff(1, -flipped.coeff(1));
        rep.spherical_conj_sym = std::max(rep.spherical_conj_sym, dist(image(flipped), conj(fp)));
    }
    return rep;
}

double quasi_regularity_check(const Original& orig, const TransformSpec& spec,
                              const std::vector<CdNumber>& probes) {
    double worst = 0.0;
    for (const CdNumber& z : probes) {
        bool complex_probe = true;
        for (int j = 2; j < z.dim(); ++j) {
            if (std::fabs(z.coeff(j)) > axis_epsilon) complex_probe = false;
        }
        if (complex_probe) continue; // the rotation family is the identity on C
        const CdNumber x = find_partner(z, 1);
        const RotationAutomorphism rot =
            build_rotation(z, x, RotationPair{1, std::max(2, z.level())});
        const CdNumber fz = transform(orig, z, spec);
        const CdNumber fx = transform(orig, embed(x, z.level()), spec);
        worst = std::max(worst, dist(fz, rot.apply(fx)));
    }
    return worst;
}

} // namespace cd
