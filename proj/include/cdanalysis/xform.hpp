#pragma once

#include <functional>
#include <vector>

#include "cdanalysis/algebra.hpp"
#include "cdanalysis/rotor.hpp"

namespace cd {

enum class KernelKind { linear, spherical };
enum class SupportKind { right_sided, two_sided, multiplicative };

/// Transformable function together with its declared growth data.
/// right_sided: f(t) = 0 for t < 0, |f(t)| <= C exp(s0 t).
/// two_sided:   |f(t)| <= C exp(s0 t) for t >= 0, |f(t)| <= C exp(-s1 t) for t < 0.
/// multiplicative: g(tau) on (0, inf) with |g| <= C tau^{s0} near 0 and
///                 |g| <= C tau^{-s1} at infinity (Mellin originals).
struct Original {
    std::function<CdNumber(double)> f;
    double s0 = 0.0;
    double s1 = 0.0;
    SupportKind support = SupportKind::right_sided;
    std::vector<double> discontinuities;
    double bound_scale = 1.0; // C in the growth bounds

    /// Verifies the growth bounds on a sample grid; returns the worst ratio.
    double check_growth(int samples = 200) const;
};

/// Kernel/basis choice for a transform: exponent u(p,t;q) = p t + q or the
/// nested-exponential form E(p t + q); optional generator basis replacing the
/// standard one.
struct TransformSpec {
    KernelKind kernel = KernelKind::linear;
    CdNumber shift;                 // q
    int level = 2;
    std::vector<CdNumber> basis;    // images of i_1..; empty = standard generators
    double tol = 1e-10;

    CdNumber basis_generator(int j) const; // N_j, j >= 1; N_0 = 1
    CdNumber exponent(const CdNumber& p, double t) const;         // u(p, t; q)
    CdNumber exponent_neg(const CdNumber& p, double t) const;     // u(-p, t; -q)
};

/// Inversion line p(tau) = anchor + direction * tau, |tau| <= truncation.
struct BromwichLine {
    double anchor = 1.0;
    CdNumber direction; // unit purely imaginary S
    double truncation = 32.0;
};

CdNumber laplace(const Original& orig, const CdNumber& p, const TransformSpec& spec);
CdNumber laplace_two_sided(const Original& orig, const CdNumber& p, const TransformSpec& spec);
CdNumber mellin(const Original& orig, const CdNumber& p, const TransformSpec& spec);

/// Componentwise principal-value inversion along the Bromwich line.
CdNumber invert(const CdFunction& image, double t, const BromwichLine& line,
                const TransformSpec& spec);
CdNumber invert_mellin(const CdFunction& image, double tau, const BromwichLine& line,
                       const TransformSpec& spec);

/// |d/dp laplace(p).h - integral of the differentiated kernel|; linear kernel.
double diff_under_integral_check(const Original& orig, const CdNumber& p, const CdNumber& h,
                                 const TransformSpec& spec, double step = 1e-5);

struct SymmetryReport {
    double conj_sym = 0.0;           // F(conj p) vs conj F(p)
    double even_sym = 0.0;           // F(-p) vs F(p)
    double spherical_conj_sym = 0.0; // F(p with i1 flipped) vs conj F(p)
};

SymmetryReport symmetry_report(const CdFunction& image, const std::vector<CdNumber>& probes,
                               const TransformSpec& spec);

/// Max residual of |F(z) - R_{z,x} F(x)| over the probes, x the canonical
/// partner of z; small exactly when the original is real-valued.
double quasi_regularity_check(const Original& orig, const TransformSpec& spec,
                              const std::vector<CdNumber>& probes);

/// Forward transform dispatched on the support kind.
CdNumber transform(const Original& orig, const CdNumber& p, const TransformSpec& spec);

} // namespace cd
