#include "cdanalysis/transcend.hpp"

#include <cmath>
#include <numbers>

namespace cd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sinc(double x) {
    if (std::fabs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

} // namespace

CdNumber axis_of(const CdNumber& z) {
    const CdNumber v = im(z);
    const double n = norm(v);
    if (n < axis_epsilon) return embed(CdNumber::generator(1), std::max(1, z.level()));
    return v / n;
}

PlanePoint to_plane(const CdNumber& z) {
    PlanePoint p;
    p.x = re(z);
    const CdNumber v = im(z);
    const double n = norm(v);
    if (n < axis_epsilon) {
        p.y = 0.0;
        p.axis = embed(CdNumber::generator(1), std::max(1, z.level()));
    } else {
        p.y = n;
        p.axis = v / n;
    }
    return p;
}

CdNumber from_plane(const std::complex<double>& w, const CdNumber& axis) {
    return CdNumber::real(w.real()) + w.imag() * axis;
}

CdNumber exp_cd(const CdNumber& z) {
    const CdNumber v = im(z);
    const double phi = norm(v);
    const double scale = std::exp(re(z));
    // e^(x + M phi) = e^x (cos phi + M sin phi); sin(phi)/phi covers phi -> 0.
    return scale * (CdNumber::real(std::cos(phi)).embedded(z.level()) + sinc(phi) * v);
}

CdNumber PolarForm::reconstruct() const {
    return modulus * exp_cd(axis * (angle + kTwoPi * static_cast<double>(branch)));
}

PolarForm polar(const CdNumber& z) {
    const double r = norm(z);
    if (r == 0.0) raise(ErrorKind::ZeroArgument, "polar form of zero");
    PolarForm pf;
    pf.modulus = r;
    const CdNumber v = im(z);
    const double vn = norm(v);
    if (vn < axis_epsilon * std::max(1.0, r)) {
        pf.axis = embed(CdNumber::generator(1), std::max(1, z.level()));
        pf.angle = re(z) >= 0.0 ? 0.0 : kPi;
    } else {
        pf.axis = v / vn;
        pf.angle = std::atan2(vn, re(z)); // in (0, pi] since vn > 0
        if (pf.angle < 0.0) pf.angle += kTwoPi;
    }
    pf.branch = 0;
    return pf;
}

CdNumber ln_cd(const CdNumber& z, long branch) {
    PolarForm pf = polar(z);
    return CdNumber::real(std::log(pf.modulus)) +
           pf.axis * (pf.angle + kTwoPi * static_cast<double>(branch));
}

CdNumber power(const CdNumber& z, const CdNumber& w, long branch) {
    return exp_cd(w * ln_cd(z, branch));
}

CdNumber sin_cd(const CdNumber& z) {
    return lift_complex([](std::complex<double> w) { return std::sin(w); }, z);
}

CdNumber cos_cd(const CdNumber& z) {
    return lift_complex([](std::complex<double> w) { return std::cos(w); }, z);
}

CdNumber sqrt_cd(const CdNumber& z) {
    if (norm(z) == 0.0) return CdNumber::zero(z.level());
    return power(z, CdNumber::real(0.5));
}

CdNumber exp_n(const std::vector<CdNumber>& a, const CdNumber& z) {
    CdNumber w = z;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        if (norm(*it) == 0.0) raise(ErrorKind::ZeroArgument, "exp_n coefficient is zero");
        w = exp_cd(*it * w);
    }
    return w;
}

CdNumber ln_n(const std::vector<CdNumber>& a, const CdNumber& z,
              const std::vector<long>& branches) {
    // Peel the outermost factor first: w -> a_k^{-1} Ln(w).
    CdNumber w = z;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (norm(a[k]) == 0.0) raise(ErrorKind::ZeroArgument, "ln_n coefficient is zero");
        if (norm(w) == 0.0) raise(ErrorKind::ZeroArgument, "ln_n hit zero at an inner stage");
        const long br = k < branches.size() ? branches[k] : 0;
        w = inverse(a[k]) * ln_cd(w, br);
    }
    return w;
}

SphericalCoords to_spherical(const CdNumber& z) {
    if (norm(z) == 0.0) raise(ErrorKind::ZeroArgument, "spherical coordinates of zero");
    const int level = std::max(1, z.level());
    const int m = (1 << level) - 1;
    SphericalCoords sc;
    sc.level = level;
    sc.radius = norm(z);
    sc.theta.assign(m, 0.0);

    // x_{k+1} = a sin(t1)...sin(tk) cos(t_{k+1}); the sign of the very last
    // coordinate is carried by t1 in [0, 2*pi], all later angles in [0, pi].
    double prod = sc.radius; // a * sin(t1) * ... * sin(t_k), signed through t1
    for (int k = 0; k < m; ++k) {
        if (std::fabs(prod) < 1e-300) {
            sc.theta[k] = 0.0;
            continue;
        }
        if (k == m - 1) {
            double t = std::atan2(z.coeff(m) / prod, z.coeff(m - 1) / prod);
            if (t < 0.0) t += kTwoPi; // reachable only when m == 1
            sc.theta[k] = t;
            break;
        }
        const double c = std::clamp(z.coeff(k) / prod, -1.0, 1.0);
        double t = std::acos(c);
        if (k == 0 && z.coeff(m) < 0.0) t = kTwoPi - t; // sin(t1) <= 0
        sc.theta[k] = t;
        prod *= std::sin(t);
    }
    return sc;
}

CdNumber from_spherical(const SphericalCoords& sc) {
    const int m = (1 << sc.level) - 1;
    CdNumber z = CdNumber::zero(sc.level);
    double prod = sc.radius;
    for (int k = 0; k < m; ++k) {
        z.set_coeff(k, prod * std::cos(sc.theta[k]));
        prod *= std::sin(sc.theta[k]);
    }
    z.set_coeff(m, prod);
    return z;
}

CdNumber axis_from_angles(const std::vector<double>& theta, int level) {
    const int m = (1 << level) - 1; // generators i_1..i_m
    CdNumber axis = CdNumber::zero(level);
    double prod = 1.0;
    for (int j = 1; j <= m; ++j) {
        const double t = static_cast<std::size_t>(j - 1) < theta.size() ? theta[j - 1] : 0.0;
        if (j < m) {
            axis.set_coeff(j, prod * std::cos(t));
            prod *= std::sin(t);
        } else {
            axis.set_coeff(j, prod);
        }
    }
    return axis;
}

namespace {

// Nesting of the canonical iterated exponential: generator index and sign of
// each stage, outermost first, for coefficients p_2, p_3, ....
struct EStage {
    int gen;
    double sign;
};

const std::vector<EStage>& e_stages(int level) {
    static const std::vector<EStage> quaternion = {{3, -1.0}, {1, -1.0}};
    static const std::vector<EStage> octonion = {
        {3, -1.0}, {1, -1.0}, {7, -1.0}, {1, 1.0}, {3, -1.0}, {1, -1.0}};
    if (level == 2) return quaternion;
    if (level == 3) return octonion;
    raise(ErrorKind::LevelMismatch, "iterated exponential needs level 2 or 3");
}

} // namespace

CdNumber iterated_e(const CdNumber& p) {
    const int level = p.level();
    if (level < 2) {
        // E(y) = y on the complex subalgebra.
        return p;
    }
    const auto& stages = e_stages(level);
    // Build from the innermost stage outward.
    CdNumber w = CdNumber::one().embedded(level);
    for (std::size_t s = stages.size(); s-- > 0;) {
        const double pk = p.coeff(static_cast<int>(2 + s));
        const CdNumber g = embed(CdNumber::generator(stages[s].gen), level);
        w = exp_cd(stages[s].sign * pk * (g * w));
    }
    const CdNumber i1 = embed(CdNumber::generator(1), level);
    return CdNumber::real(p.coeff(0)).embedded(level) + p.coeff(1) * (i1 * w);
}

CdNumber iterated_e_inv(const CdNumber& z, int level) {
    if (level < 2 || level > 3)
        raise(ErrorKind::LevelMismatch, "iterated exponential inverse needs level 2 or 3");
    const auto& stages = e_stages(level);
    CdNumber p = CdNumber::zero(level);
    p.set_coeff(0, re(z));

    const CdNumber v = im(embed(z, level));
    const double p1 = norm(v);
    p.set_coeff(1, p1);
    if (p1 < axis_epsilon) {
        // Real input: all angles vanish by convention.
        return p;
    }
    const CdNumber i1 = embed(CdNumber::generator(1), level);
    // K = i1 * w  =>  w = -(i1 * K).
    CdNumber w = -(i1 * (v / p1));
    for (std::size_t s = 0; s < stages.size(); ++s) {
        const int idx = static_cast<int>(2 + s);
        const CdNumber g = embed(CdNumber::generator(stages[s].gen), level);
        const CdNumber wim = im(w);
        const double sin_a = norm(wim);
        if (s + 1 == stages.size()) {
            // Last stage: w = cos(p_k) + sign*sin(p_k)*g.
            double sin_signed = 0.0;
            for (int j = 0; j < w.dim(); ++j) sin_signed += w.coeff(j) * g.coeff(j);
            p.set_coeff(idx, std::atan2(stages[s].sign * sin_signed, re(w)));
            break;
        }
        const double angle = std::atan2(sin_a, re(w)); // principal [0, pi]
        p.set_coeff(idx, angle);
        if (sin_a < axis_epsilon)
            raise(ErrorKind::DegenerateAngles, "inner sine vanishes; deeper angles undetermined");
        const CdNumber gw = (stages[s].sign / sin_a) * wim; // g * w_next
        w = -(g * gw);
    }
    return p;
}

} // namespace cd
