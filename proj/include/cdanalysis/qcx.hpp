#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "cdanalysis/algebra.hpp"
#include "cdanalysis/rotor.hpp"

namespace cd {

using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

/// Holomorphic seed on the complex line together with the data needed to
/// transport it off the line: power series and exponential sums carry real
/// coefficients; arbitrary complex callables are supported as black boxes.
class ExtensionSpec {
public:
    enum class Kind { power_series, exp_sum, callable };

    static ExtensionSpec power_series(std::vector<double> coeffs, double center,
                                      double radius, int level = 2, bool spherical = false);
    static ExtensionSpec exp_sum(std::vector<double> coeffs, std::vector<double> rates,
                                 double center, int level = 2, bool spherical = false);
    static ExtensionSpec callable(ComplexFunction f, double center = 0.0, int level = 2,
                                  bool spherical = false);

    Kind kind() const noexcept { return kind_; }
    int level() const noexcept { return level_; }
    bool spherical() const noexcept { return spherical_; }
    double center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    const std::vector<double>& rates() const noexcept { return rates_; }

    /// Seed value on the complex line.
    std::complex<double> seed(std::complex<double> y) const;

private:
    Kind kind_ = Kind::callable;
    int level_ = 2;
    bool spherical_ = false;
    double center_ = 0.0;
    double radius_ = 0.0;
    std::vector<double> coeffs_;
    std::vector<double> rates_;
    ComplexFunction fn_;
};

/// Transport of the seed to the full algebra through the canonical partner
/// and the rotation family; complex arguments evaluate the seed directly.
CdNumber eval_extension(const ExtensionSpec& spec, const CdNumber& z);

/// Power-series evaluation directly in the algebra; must agree with
/// eval_extension inside the radius.
CdNumber eval_series_direct(const ExtensionSpec& spec, const CdNumber& z);

/// Deterministic samples of the zero surface through z0 for the (1,b)
/// family: the sphere Re z = Re z0, |Im z| = |Im z0|.
std::vector<CdNumber> zero_surface(const CdNumber& z0, double y0, int n_samples,
                                   int level);

struct PseudoConformalReport {
    double antiholomorphy = 0.0;  // max plane-restricted conjugate-derivative
    double angle_defect = 0.0;    // max residual of the angle condition
    double min_gain = 0.0;        // min |f'(xi).h| over unit directions
};

PseudoConformalReport check_pseudo_conformal(const CdFunction& f, const CdNumber& xi,
                                             int n_dirs = 24, double step = 1e-5);

/// Residual of the derivative-transport condition between z and its partner
/// y along direction h; small for genuine quasi-conformal extensions.
double check_q7(const ExtensionSpec& spec, const CdNumber& z, const CdNumber& y,
                const CdNumber& h, double step = 1e-5);

ExtensionSpec compose_extensions(const ExtensionSpec& outer, const ExtensionSpec& inner);
ExtensionSpec product_extension(const ExtensionSpec& f1, const ExtensionSpec& f2);

/// Extension wrapped as a plain function of the algebra variable.
CdFunction as_function(const ExtensionSpec& spec);

} // namespace cd
