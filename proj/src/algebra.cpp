#include "cdanalysis/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <ostream>
#include <sstream>

namespace cd {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroDivision: return "ZeroDivision";
        case ErrorKind::ZeroArgument: return "ZeroArgument";
        case ErrorKind::DegenerateAngles: return "DegenerateAngles";
        case ErrorKind::LevelMismatch: return "LevelMismatch";
        case ErrorKind::RePartMismatch: return "RePartMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DownEmbed: return "DownEmbed";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::SeedSingularity: return "SeedSingularity";
        case ErrorKind::DivergenceRadius: return "DivergenceRadius";
        case ErrorKind::StepUnderflow: return "StepUnderflow";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::EvaluationFailure: return "EvaluationFailure";
        case ErrorKind::BranchFailure: return "BranchFailure";
        case ErrorKind::UnwrapAmbiguity: return "UnwrapAmbiguity";
        case ErrorKind::ZeroOnPath: return "ZeroOnPath";
        case ErrorKind::DomainOfConvergence: return "DomainOfConvergence";
        case ErrorKind::EmptyStrip: return "EmptyStrip";
        case ErrorKind::QuadratureFailure: return "QuadratureFailure";
        case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
        case ErrorKind::PoleAt: return "PoleAt";
        case ErrorKind::PoleAtOne: return "PoleAtOne";
        case ErrorKind::DomainOfRepresentation: return "DomainOfRepresentation";
        case ErrorKind::NonPositive: return "NonPositive";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "UnknownError";
}

namespace {

struct SignedIndex {
    int sign;
    int index;
};

// Doubling product (a,b)(c,d) = (ac - d*b, da + bc*) applied to basis pairs.
SignedIndex doubling_product(int level, int j, int k) {
    if (level == 0) return {1, 0};
    const int half = 1 << (level - 1);
    const bool j_hi = j >= half;
    const bool k_hi = k >= half;
    const int jl = j_hi ? j - half : j;
    const int kl = k_hi ? k - half : k;

    auto mul = [&](int a, int b) { return doubling_product(level - 1, a, b); };
    auto conj_sign = [&](int a) { return a == 0 ? 1 : -1; };

    if (!j_hi && !k_hi) {
        return mul(jl, kl); // ac
    }
    if (j_hi && k_hi) {
        // -d* b : d = i_jl? no: (a,b)=(0,i_jl),(c,d)=(0,i_kl): ac - d*b = -(i_kl)* i_jl
        SignedIndex p = mul(kl, jl);
        return {-conj_sign(kl) * p.sign, p.index};
    }
    if (!j_hi && k_hi) {
        // (a,0)(0,d) = (0, da)
        SignedIndex p = mul(kl, jl);
        return {p.sign, p.index + half};
    }
    // (0,b)(c,0) = (0, bc*)
    SignedIndex p = mul(jl, kl);
    return {conj_sign(kl) * p.sign, p.index + half};
}

// Every product displayed in the octonion generator list, used to validate
// the doubling construction on startup. i_j * i_k = sign * i_index.
struct TableEntry {
    int j, k, sign, index;
};

constexpr TableEntry kCanonicalProducts[] = {
    {1, 2, 1, 3}, {1, 4, 1, 5}, {2, 4, 1, 6}, {3, 4, 1, 7},
    {1, 6, -1, 7}, {1, 7, 1, 6}, {2, 5, 1, 7}, {2, 7, -1, 5},
    {3, 5, -1, 6}, {3, 6, 1, 5}, {5, 6, -1, 3}, {5, 7, 1, 2},
    {6, 7, -1, 1},
};

} // namespace

GeneratorTable::GeneratorTable(int level) : level_(level) {
    const int n = dim();
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            SignedIndex p = doubling_product(level, j, k);
            sign_[j][k] = static_cast<std::int8_t>(p.sign);
            index_[j][k] = static_cast<std::uint8_t>(p.index);
        }
    }
    // The doubling convention must reproduce the canonical table exactly;
    // a mismatch means the construction itself is wrong.
    for (int k = 1; k < n; ++k) {
        if (!(sign_[k][k] == -1 && index_[k][k] == 0))
            throw std::logic_error("generator table: i_k^2 != -1");
        if (!(sign_[0][k] == 1 && index_[0][k] == static_cast<unsigned>(k)))
            throw std::logic_error("generator table: unit row broken");
    }
    for (int j = 1; j < n; ++j) {
        for (int k = 1; k < n; ++k) {
            if (j == k) continue;
            if (sign_[j][k] != -sign_[k][j] || index_[j][k] != index_[k][j])
                throw std::logic_error("generator table: anticommutation broken");
        }
    }
    for (const TableEntry& e : kCanonicalProducts) {
        if (e.j >= n || e.k >= n) continue;
        if (sign_[e.j][e.k] != e.sign || index_[e.j][e.k] != static_cast<unsigned>(e.index))
            throw std::logic_error("generator table: canonical product mismatch");
    }
}

const GeneratorTable& generator_table(int level) {
    static const GeneratorTable tables[4] = {
        GeneratorTable(0), GeneratorTable(1), GeneratorTable(2), GeneratorTable(3)};
    if (level < 0 || level > 3) raise(ErrorKind::LevelMismatch, "level must be in 0..3");
    return tables[level];
}

int CdNumber::check_level(int level) {
    if (level < 0 || level > max_level)
        raise(ErrorKind::LevelMismatch, "level must be in 0..3");
    return level;
}

CdNumber CdNumber::generator(int j) {
    if (j < 0 || j > 7) raise(ErrorKind::IndexOutOfRange, "generator index out of range");
    int level = 0;
    while ((1 << level) <= j) ++level;
    CdNumber z = zero(level);
    z.c_[j] = 1.0;
    return z;
}

CdNumber CdNumber::from_coeffs(int level, const std::vector<double>& coeffs) {
    CdNumber z = zero(check_level(level));
    if (coeffs.size() != static_cast<std::size_t>(z.dim()))
        raise(ErrorKind::LevelMismatch, "coefficient count does not match level");
    std::copy(coeffs.begin(), coeffs.end(), z.c_.begin());
    return z;
}

void CdNumber::set_coeff(int j, double v) {
    if (j < 0 || j >= dim()) raise(ErrorKind::IndexOutOfRange, "coefficient index out of range");
    c_[j] = v;
}

CdNumber CdNumber::embedded(int target_level) const {
    if (target_level < level_) {
        for (int j = 1 << target_level; j < dim(); ++j) {
            if (c_[j] != 0.0)
                raise(ErrorKind::DownEmbed, "nonzero high coefficients block down-embedding");
        }
    }
    CdNumber z = zero(check_level(target_level));
    std::copy(c_.begin(), c_.begin() + std::min(dim(), z.dim()), z.c_.begin());
    return z;
}

CdNumber embed(const CdNumber& z, int target_level) { return z.embedded(target_level); }

CdNumber operator+(const CdNumber& a, const CdNumber& b) {
    CdNumber r = CdNumber::zero(std::max(a.level_, b.level_));
    for (int j = 0; j < r.dim(); ++j) r.c_[j] = a.coeff(j) + b.coeff(j);
    return r;
}

CdNumber operator-(const CdNumber& a, const CdNumber& b) {
    CdNumber r = CdNumber::zero(std::max(a.level_, b.level_));
    for (int j = 0; j < r.dim(); ++j) r.c_[j] = a.coeff(j) - b.coeff(j);
    return r;
}

CdNumber CdNumber::operator-() const {
    CdNumber r = *this;
    for (int j = 0; j < dim(); ++j) r.c_[j] = -r.c_[j];
    return r;
}

CdNumber operator*(const CdNumber& a, const CdNumber& b) {
    const int level = std::max(a.level_, b.level_);
    const GeneratorTable& table = generator_table(level);
    const int n = 1 << level;
    CdNumber r = CdNumber::zero(level);
    for (int j = 0; j < n; ++j) {
        const double aj = a.coeff(j);
        if (aj == 0.0) continue;
        for (int k = 0; k < n; ++k) {
            const double bk = b.coeff(k);
            if (bk == 0.0) continue;
            r.c_[table.index(j, k)] += table.sign(j, k) * aj * bk;
        }
    }
    return r;
}

CdNumber operator*(double s, const CdNumber& a) {
    CdNumber r = a;
    for (int j = 0; j < r.dim(); ++j) r.c_[j] *= s;
    return r;
}

CdNumber operator*(const CdNumber& a, double s) { return s * a; }

CdNumber operator/(const CdNumber& a, double s) { return (1.0 / s) * a; }

CdNumber conj(const CdNumber& z) {
    CdNumber r = z;
    for (int j = 1; j < r.dim(); ++j) r.set_coeff(j, -r.coeff(j));
    return r;
}

double norm_sq(const CdNumber& z) {
    double s = 0.0;
    for (int j = 0; j < z.dim(); ++j) s += z.coeff(j) * z.coeff(j);
    return s;
}

double norm(const CdNumber& z) { return std::sqrt(norm_sq(z)); }

double re(const CdNumber& z) { return z.coeff(0); }

CdNumber im(const CdNumber& z) {
    CdNumber r = z;
    r.set_coeff(0, 0.0);
    return r;
}

CdNumber inverse(const CdNumber& z, double epsilon) {
    const double n2 = norm_sq(z);
    if (!(n2 > epsilon)) raise(ErrorKind::ZeroDivision, "inverse of (near-)zero element");
    return conj(z) / n2;
}

CdNumber operator/(const CdNumber& a, const CdNumber& b) { return a * inverse(b); }

double proj(const CdNumber& z, int j) {
    if (j < 0 || j >= z.dim()) raise(ErrorKind::IndexOutOfRange, "projection index out of range");
    return z.coeff(j);
}

CdNumber conj_formula(const CdNumber& z) {
    const int b = z.level();
    if (b < 2) raise(ErrorKind::LevelMismatch, "closed-form conjugation needs level 2 or 3");
    const double scale = 1.0 / ((1 << b) - 2);
    CdNumber acc = -z;
    for (int s = 1; s < z.dim(); ++s) {
        const CdNumber gen = embed(CdNumber::generator(s), b);
        acc += gen * (z * conj(gen));
    }
    return scale * acc;
}

CdNumber re_formula(const CdNumber& z) { return 0.5 * (z + conj_formula(z)); }

double proj_formula(const CdNumber& z, int j) {
    if (j < 0 || j >= z.dim()) raise(ErrorKind::IndexOutOfRange, "projection index out of range");
    if (j == 0) return re(re_formula(z));
    const CdNumber gen = embed(CdNumber::generator(j), z.level());
    const CdNumber v = 0.5 * (-(z * gen) + gen * conj_formula(z));
    return re(v);
}

bool approx_eq(double a, double b, const Tolerance& tol) {
    const double diff = std::fabs(a - b);
    return diff <= tol.abs + tol.rel * std::max(std::fabs(a), std::fabs(b));
}

bool approx_eq(const CdNumber& a, const CdNumber& b, const Tolerance& tol) {
    const double scale = std::max(norm(a), norm(b));
    return dist(a, b) <= tol.abs + tol.rel * scale;
}

double dist(const CdNumber& a, const CdNumber& b) {
    double d = 0.0;
    const int n = std::max(a.dim(), b.dim());
    for (int j = 0; j < n; ++j) d = std::max(d, std::fabs(a.coeff(j) - b.coeff(j)));
    return d;
}

std::ostream& operator<<(std::ostream& os, const CdNumber& z) {
    os << "(";
    for (int j = 0; j < z.dim(); ++j) {
        if (j) os << ", ";
        os << z.coeff(j);
    }
    return os << ")";
}

} // namespace cd
