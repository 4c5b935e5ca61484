#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cdanalysis/algebra.hpp"
#include "cdanalysis/parallel.hpp"

namespace cd {

/// Parametric rectifiable curve on [0,1].
struct Path {
    std::function<CdNumber(double)> map;
    int initial_samples = 64;
    int max_samples = 1 << 20;
    bool closed = false;

    CdNumber at(double t) const { return map(t); }

    static Path circle(const CdNumber& center, double rho, const CdNumber& axis);
    static Path segment(const CdNumber& from, const CdNumber& to);
    static Path concat(std::vector<Path> pieces);
    Path reversed() const;
};

/// Multiplication order of the Riemann sums: f(z) dz or dz f(z).
enum class MulOrder { right, left };

/// Riemann-sum line integral with midpoint sampling, refined by interval
/// halving until successive estimates differ by less than tol.
CdNumber line_integral(const CdFunction& f, const Path& path, double tol = 1e-10,
                       MulOrder order = MulOrder::right);

/// (2 pi)^{-1} integral of f around the circle of radius rho about z0 in the
/// plane R + N R; N must be unit purely imaginary.
CdNumber residue(const CdFunction& f, const CdNumber& z0, const CdNumber& axis,
                 double rho, double tol = 1e-10);

/// n-residue over the iterated-exponential loop. The a-list supplies the
/// n-1 inner coefficients; branches of the peeled logarithms are tracked
/// continuously along the discretized loop starting from Ln(1) = 0.
CdNumber residue_n(const CdFunction& f, const CdNumber& z0, const CdNumber& axis,
                   double rho, const std::vector<CdNumber>& a, double tol = 1e-9);

/// Argument variation of f along the path through the iterated logarithm
/// Ln_n(a_1,...,a_{n-1},1; f(z)), branch-continuous along the samples.
CdNumber delta_arg_n(const CdFunction& f, const Path& path,
                     const std::vector<CdNumber>& a = {}, double tol = 1e-9);

struct ArgRatio {
    double p_raw = 0.0;   // |Delta_gamma Arg_n| / |Delta_omega Arg_1|
    long p_num = 0;       // small-denominator rational estimate of p_raw
    long p_den = 1;
    CdNumber K;           // unit factor with Delta_gamma = p K Delta_omega
    CdNumber delta_gamma; // surface-loop argument variation
    CdNumber delta_omega; // complex-loop argument variation
};

/// Composite surface loop comparison: an outer and a reversed inner
/// iterated-exponential loop around the zero surface through z0, joined by a
/// twice-traversed segment, against a small complex loop omega around z0.
ArgRatio surface_arg_ratio(const CdFunction& f, const CdNumber& z0, double rho_plus,
                           double rho_minus, int n, const std::vector<CdNumber>& a,
                           double omega_radius = 0.05, double tol = 1e-8);

/// Branch-continuous logarithm values along a sampled curve; w must avoid 0.
/// Each value is the principal log adjusted by whole turns about the local
/// axis so that consecutive samples stay within a jump of pi.
std::vector<CdNumber> tracked_log(const std::vector<CdNumber>& w);

} // namespace cd
