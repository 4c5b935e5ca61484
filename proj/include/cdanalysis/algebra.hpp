#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "cdanalysis/error.hpp"

namespace cd {

class CdNumber;

/// Function of one algebra variable, the common callable currency.
using CdFunction = std::function<CdNumber(const CdNumber&)>;

/// Comparison tolerances used across the library. Callers may pass their own.
struct Tolerance {
    double rel = 1e-12;
    double abs = 1e-14;
};

inline const Tolerance& default_tolerance() {
    static const Tolerance tol{};
    return tol;
}

/// Signed multiplication table for the basis generators of a Cayley-Dickson
/// algebra. product(j,k) returns (sign, index) with i_j * i_k = sign * i_index.
class GeneratorTable {
public:
    static constexpr int max_dim = 8;

    explicit GeneratorTable(int level);

    int level() const noexcept { return level_; }
    int dim() const noexcept { return 1 << level_; }

    int sign(int j, int k) const { return sign_[j][k]; }
    int index(int j, int k) const { return index_[j][k]; }

private:
    int level_;
    std::array<std::array<std::int8_t, max_dim>, max_dim> sign_{};
    std::array<std::array<std::uint8_t, max_dim>, max_dim> index_{};
};

/// Table for a given level (0..3), built once and validated on first use.
const GeneratorTable& generator_table(int level);

/// Element of the Cayley-Dickson algebra of the given level:
/// level 0 = R, 1 = C, 2 = H (quaternions), 3 = O (octonions).
/// Coefficient j multiplies the basis generator i_j, i_0 = 1.
class CdNumber {
public:
    static constexpr int max_level = 3;

    CdNumber() : level_(0) { c_.fill(0.0); }

    static CdNumber real(double x) {
        CdNumber z;
        z.c_[0] = x;
        return z;
    }

    /// Basis generator i_j at the smallest level containing it.
    static CdNumber generator(int j);

    static CdNumber zero(int level) {
        CdNumber z;
        z.level_ = check_level(level);
        return z;
    }

    static CdNumber one() { return real(1.0); }

    static CdNumber from_coeffs(int level, const std::vector<double>& coeffs);

    int level() const noexcept { return level_; }
    int dim() const noexcept { return 1 << level_; }

    double coeff(int j) const { return j < dim() ? c_[j] : 0.0; }
    double operator[](int j) const { return c_[j]; }
    void set_coeff(int j, double v);

    std::vector<double> coeffs() const { return {c_.begin(), c_.begin() + dim()}; }

    CdNumber embedded(int target_level) const;

    friend CdNumber operator+(const CdNumber& a, const CdNumber& b);
    friend CdNumber operator-(const CdNumber& a, const CdNumber& b);
    friend CdNumber operator*(const CdNumber& a, const CdNumber& b);
    friend CdNumber operator*(double s, const CdNumber& a);
    friend CdNumber operator*(const CdNumber& a, double s);
    friend CdNumber operator/(const CdNumber& a, double s);
    CdNumber operator-() const;

    CdNumber& operator+=(const CdNumber& b) { return *this = *this + b; }
    CdNumber& operator-=(const CdNumber& b) { return *this = *this - b; }
    CdNumber& operator*=(const CdNumber& b) { return *this = *this * b; }

private:
    static int check_level(int level);

    int level_;
    std::array<double, 8> c_{};
};

CdNumber conj(const CdNumber& z);
double norm_sq(const CdNumber& z);
double norm(const CdNumber& z);
double re(const CdNumber& z);
CdNumber im(const CdNumber& z);

/// Multiplicative inverse conj(z)/|z|^2. Throws ZeroDivision below epsilon.
CdNumber inverse(const CdNumber& z, double epsilon = 1e-300);

/// Right division a * inverse(b). Multiplication order matters beyond C.
CdNumber operator/(const CdNumber& a, const CdNumber& b);

/// Coefficient extraction, plus the closed-form projection evaluated through
/// generator products as an independent route (levels 2 and 3 only).
double proj(const CdNumber& z, int j);
double proj_formula(const CdNumber& z, int j);

/// Conjugation by the closed formula (2^b-2)^{-1}{-z + sum_s s(z s*)},
/// valid for levels 2 and 3; used as a cross-check of coefficient negation.
CdNumber conj_formula(const CdNumber& z);

/// Real part by the closed formula (z + conj_formula(z))/2, levels 2..3.
CdNumber re_formula(const CdNumber& z);

CdNumber embed(const CdNumber& z, int target_level);

bool approx_eq(const CdNumber& a, const CdNumber& b, const Tolerance& tol = default_tolerance());
bool approx_eq(double a, double b, const Tolerance& tol = default_tolerance());

/// Max over coefficients of |a_j - b_j|.
double dist(const CdNumber& a, const CdNumber& b);

std::ostream& operator<<(std::ostream& os, const CdNumber& z);

} // namespace cd
