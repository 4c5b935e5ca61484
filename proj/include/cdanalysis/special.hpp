#pragma once

#include <complex>
#include <vector>

#include "cdanalysis/algebra.hpp"

namespace cd {

/// Euler constant as printed in the product formula for 1/Gamma.
inline constexpr double euler_constant = 0.57721566490153286;

/// Representations of the zeta function; each carries its own validity strip.
enum class ZetaRep {
    euler_maclaurin, // sawtooth-integral continuation, Re z > -1
    strip,           // sawtooth integral over (0, inf), -1 < Re z < 0
    reflected,       // functional equation, Re z < 0
    hankel,          // loop-contour form, z != 1 (away from integers >= 2)
    mellin_digamma,  // digamma Mellin integral, 0 < Re z < 1
};

CdNumber gamma_reciprocal(const CdNumber& z);
CdNumber gamma_fn(const CdNumber& z);

/// psi(1 + z), the logarithmic derivative of Gamma at 1 + z.
CdNumber digamma(const CdNumber& z);

CdNumber zeta(const CdNumber& z, ZetaRep rep);

/// Representation picked from the real part: euler_maclaurin right of -1/2,
/// reflected otherwise.
CdNumber zeta_auto(const CdNumber& z);

/// Transport-based evaluation: value at the canonical partner pushed through
/// the rotation family. Cross-check path for the plane-restricted route.
CdNumber zeta_rotated(const CdNumber& z, ZetaRep rep);

/// Loop-contour integral J(z); vanishes at z = 2, 3, ....
std::complex<double> zeta_hankel_loop(std::complex<double> z);

CdNumber chi_fn(const CdNumber& z);
CdNumber xi_fn(const CdNumber& z);
CdNumber upsilon_fn(const CdNumber& z);

/// Theta-type series sum_{n>=1} exp(-n^2 pi x), x > 0.
double theta_psi(double x);

/// Completed-zeta transform built from the spherical-kernel two-sided
/// transform of the even theta original; agrees with xi(p + 1/2) on the
/// complex line.
CdNumber omega_s(const CdNumber& p, double tol = 1e-9);

struct ZeroBracket {
    double lo = 0.0;
    double hi = 0.0;
    double refined = 0.0;
    double zeta_abs = 0.0;
};

/// Sign-change scan of the completed zeta along 1/2 + t*axis, refined by
/// bisection to width 1e-6.
std::vector<ZeroBracket> critical_line_scan(double t_lo, double t_hi, double step,
                                            const CdNumber& axis);

/// Finite partial-sum identity: closed form for sum_{n=a+1}^{q} n^{-z} using
/// exact per-interval sawtooth antiderivatives.
std::complex<double> zeta_partial_rhs(long a, long q, std::complex<double> z);

} // namespace cd
