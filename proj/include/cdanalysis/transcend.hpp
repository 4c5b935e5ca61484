#pragma once

#include <complex>
#include <vector>

#include "cdanalysis/algebra.hpp"

namespace cd {

/// Imaginary parts smaller than this are treated as exactly real when
/// extracting a polar axis, to avoid axis noise from rounding.
inline constexpr double axis_epsilon = 1e-13;

/// Polar data of a nonzero element: z = modulus * exp(axis*(angle + 2*pi*branch)).
/// The axis is unit and purely imaginary; angle lies in [0, 2*pi).
/// For (near-)real z the axis defaults to i1.
struct PolarForm {
    double modulus = 0.0;
    CdNumber axis;
    double angle = 0.0;
    long branch = 0;

    CdNumber reconstruct() const;
};

/// Spherical coordinates of Cartesian coefficients: radius plus 2^b - 1
/// angles, theta[0] in [0, 2*pi], the rest in [0, pi].
struct SphericalCoords {
    int level = 1;
    double radius = 0.0;
    std::vector<double> theta;
};

/// View of z inside its complex plane R + axis*R.
struct PlanePoint {
    double x = 0.0;      // real part
    double y = 0.0;      // coefficient along axis, >= 0 by construction
    CdNumber axis;       // unit purely imaginary

    std::complex<double> value() const { return {x, y}; }
};

PlanePoint to_plane(const CdNumber& z);
CdNumber from_plane(const std::complex<double>& w, const CdNumber& axis);

/// Unit axis of the imaginary part; i1 when |Im z| < axis_epsilon.
CdNumber axis_of(const CdNumber& z);

CdNumber exp_cd(const CdNumber& z);
PolarForm polar(const CdNumber& z);
CdNumber ln_cd(const CdNumber& z, long branch = 0);
CdNumber power(const CdNumber& z, const CdNumber& w, long branch = 0);

CdNumber sin_cd(const CdNumber& z);
CdNumber cos_cd(const CdNumber& z);
CdNumber sqrt_cd(const CdNumber& z);

/// Iterated exponential exp(a1 exp(a2 ... exp(an z))).
CdNumber exp_n(const std::vector<CdNumber>& a, const CdNumber& z);

/// Inverse of exp_n with a branch index per peeled stage (outermost first).
/// Missing branch entries default to the principal branch.
CdNumber ln_n(const std::vector<CdNumber>& a, const CdNumber& z,
              const std::vector<long>& branches = {});

SphericalCoords to_spherical(const CdNumber& z);
CdNumber from_spherical(const SphericalCoords& sc);

/// Unit imaginary axis from the angles (theta_2, ..., theta_{2^b-1}).
CdNumber axis_from_angles(const std::vector<double>& theta, int level);

/// Canonical nested exponential map: E2 on quaternions, E6 on octonions.
/// E(y) = y whenever only coefficients 0 and 1 are nonzero.
CdNumber iterated_e(const CdNumber& p);

/// Recovers p from E(p) on the principal angle domain. Throws
/// DegenerateAngles when an intermediate sine vanishes.
CdNumber iterated_e_inv(const CdNumber& z, int level);

/// Lift of a complex scalar function to the plane R + axis(z)*R.
template <class F>
CdNumber lift_complex(F&& f, const CdNumber& z) {
    const PlanePoint p = to_plane(z);
    return from_plane(f(p.value()), p.axis);
}

} // namespace cd
