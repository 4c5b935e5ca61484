#include "cdanalysis/contour.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "cdanalysis/transcend.hpp"

namespace cd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

Path Path::circle(const CdNumber& center, double rho, const CdNumber& axis) {
    CdNumber n = axis;
    const double an = norm(n);
    if (an == 0.0 || std::fabs(re(n)) > 1e-12)
        raise(ErrorKind::ZeroArgument, "circle axis must be nonzero purely imaginary");
    n = n / an;
    Path p;
    p.closed = true;
    p.map = [center, rho, n](double t) { return center + rho * exp_cd((kTwoPi * t) * n); };
    return p;
}

Path Path::segment(const CdNumber& from, const CdNumber& to) {
    Path p;
    p.closed = false;
    p.map = [from, to](double t) { return (1.0 - t) * from + t * to; };
    return p;
}

Path Path::concat(std::vector<Path> pieces) {
    if (pieces.empty()) raise(ErrorKind::ZeroArgument, "cannot concatenate zero paths");
    Path p;
    const auto shared = std::make_shared<std::vector<Path>>(std::move(pieces));
    const std::size_t m = shared->size();
    p.initial_samples = static_cast<int>(64 * m);
    p.map = [shared, m](double t) {
        const double scaled = t * static_cast<double>(m);
        std::size_t k = static_cast<std::size_t>(scaled);
        if (k >= m) k = m - 1;
        return (*shared)[k].at(scaled - static_cast<double>(k));
    };
    return p;
}

Path Path::reversed() const {
    Path p = *this;
    const auto inner = map;
    p.map = [inner](double t) { return inner(1.0 - t); };
    return p;
}

namespace {

CdNumber midpoint_sum(const CdFunction& f, const Path& path, int m, MulOrder order) {
    // Endpoint samples at k/m, integrand sampled at midpoints. Chunked so the
    // reduction order is independent of the thread count.
    const std::size_t chunk = 1024;
    const std::size_t n_chunks = (static_cast<std::size_t>(m) + chunk - 1) / chunk;
    std::vector<CdNumber> partial(n_chunks);
    par::parallel_for(n_chunks, [&](std::size_t ci) {
        const std::size_t lo = ci * chunk;
        const std::size_t hi = std::min(lo + chunk, static_cast<std::size_t>(m));
        CdNumber acc;
        CdNumber prev = path.at(static_cast<double>(lo) / m);
        for (std::size_t k = lo; k < hi; ++k) {
            const CdNumber next = path.at(static_cast<double>(k + 1) / m);
            const CdNumber mid = f(path.at((static_cast<double>(k) + 0.5) / m));
            const CdNumber dz = next - prev;
            acc += order == MulOrder::right ? mid * dz : dz * mid;
            prev = next;
        }
        partial[ci] = acc;
    });
    return par::ordered_sum(partial);
}

} // namespace

CdNumber line_integral(const CdFunction& f, const Path& path, double tol, MulOrder order) {
    // Chord Riemann sums carry an h^2 error expansion on smooth pieces, so
    // one Richardson step of the halving sequence converges at fourth order.
    int m = std::max(8, path.initial_samples);
    CdNumber prev = midpoint_sum(f, path, m, order);
    CdNumber prev_extrap;
    bool have_extrap = false;
    while (2 * m <= path.max_samples) {
        m *= 2;
        const CdNumber cur = midpoint_sum(f, path, m, order);
        const CdNumber extrap = (4.0 * cur - prev) / 3.0;
        if (have_extrap && dist(extrap, prev_extrap) < tol) return extrap;
        prev = cur;
        prev_extrap = extrap;
        have_extrap = true;
    }
    raise(ErrorKind::NoConvergence, "line integral did not settle within the sample cap");
}

namespace {

// First angular moment of f on the circle of radius rho about z0. Only the
// +-1 harmonics of the loop variable survive the sine weight, so
// -2 rho * moment = residue + (even powers of rho); two radii cancel the
// leading holomorphic contribution.
CdNumber sine_moment(const CdFunction& f, const CdNumber& z0, const CdNumber& axis,
                     double rho, double tol) {
    int m = 64;
    CdNumber prev;
    bool have_prev = false;
    while (m <= (1 << 20)) {
        std::vector<CdNumber> terms(static_cast<std::size_t>(m));
        par::parallel_for(terms.size(), [&](std::size_t k) {
            const double t = (static_cast<double>(k) + 0.5) / m;
            terms[k] = f(z0 + rho * exp_cd((kTwoPi * t) * axis)) * std::sin(kTwoPi * t);
        });
        const CdNumber cur = par::ordered_sum(terms) / static_cast<double>(m);
        if (have_prev && dist(cur, prev) < tol) return (-2.0 * rho) * cur;
        prev = cur;
        have_prev = true;
        m *= 2;
    }
    raise(ErrorKind::NoConvergence, "residue moment did not settle within the sample cap");
}

// True when the sampled values commute with the loop plane; the pointwise
// loop integral is then classical and exact.
bool commutes_with_axis(const CdFunction& f, const CdNumber& z0, const CdNumber& axis,
                        double rho) {
    double worst = 0.0;
    double scale = 1.0;
    for (int k = 0; k < 8; ++k) {
        const double t = (k + 0.37) / 8.0;
        const CdNumber v = f(z0 + rho * exp_cd((kTwoPi * t) * axis));
        worst = std::max(worst, dist(v * axis, axis * v));
        scale = std::max(scale, norm(v));
    }
    return worst < 1e-10 * scale;
}

} // namespace

CdNumber residue(const CdFunction& f, const CdNumber& z0, const CdNumber& axis,
                 double rho, double tol) {
    CdNumber n = axis;
    const double an = norm(n);
    if (an == 0.0 || std::fabs(re(n)) > 1e-12)
        raise(ErrorKind::ZeroArgument, "residue direction must be nonzero purely imaginary");
    n = n / an;
    if (commutes_with_axis(f, z0, n, rho)) {
        // Plane-valued integrand: classical loop integral in the plane.
        const Path gamma = Path::circle(z0, rho, n);
        return an * (line_integral(f, gamma, tol * kTwoPi, MulOrder::right) / kTwoPi);
    }
    // Bracket-structured integrand: extract the pole slot with the rotation
    // kernel; the two radii remove the rho^2 term of the even error series.
    const CdNumber coarse = sine_moment(f, z0, n, rho, tol * 0.5);
    const CdNumber fine = sine_moment(f, z0, n, rho * 0.5, tol * 0.5);
    return an * ((4.0 * fine - coarse) / 3.0);
}

std::vector<CdNumber> tracked_log(const std::vector<CdNumber>& w) {
    std::vector<CdNumber> out;
    out.reserve(w.size());
    CdNumber prev_axis;
    bool have_axis = false;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const double wn = norm(w[k]);
        if (wn == 0.0) raise(ErrorKind::ZeroOnPath, "logarithm hit zero along the path");
        const CdNumber v_im = im(w[k]);
        const double imn = norm(v_im);
        CdNumber ax;
        if (imn > axis_epsilon * std::max(1.0, wn)) {
            ax = v_im / imn;
        } else if (have_axis) {
            // Sample sits on the real axis; stay in the neighbour's plane.
            ax = prev_axis;
        } else {
            ax = embed(CdNumber::generator(1), std::max(1, w[k].level()));
        }
        CdNumber v = CdNumber::real(std::log(wn)) + std::atan2(imn, re(w[k])) * ax;
        if (k > 0) {
            double along = 0.0;
            for (int j = 0; j < std::max(out.back().dim(), ax.dim()); ++j)
                along += (out.back().coeff(j) - v.coeff(j)) * ax.coeff(j);
            const double turns = std::round(along / kTwoPi);
            if (turns != 0.0) v += (kTwoPi * turns) * ax;
        }
        out.push_back(v);
        prev_axis = ax;
        have_axis = true;
    }
    return out;
}

namespace {

// Ln_{n-1}(a_1,...,a_{n-1}; w(t)) along the samples, peeling the outermost
// factor first with branch continuity at every stage.
std::vector<CdNumber> tracked_peel(std::vector<CdNumber> cur, const std::vector<CdNumber>& a) {
    for (const CdNumber& ak : a) {
        if (norm(ak) == 0.0) raise(ErrorKind::ZeroArgument, "zero coefficient in Ln chain");
        cur = tracked_log(cur);
        const CdNumber inv = inverse(ak);
        for (auto& v : cur) v = inv * v;
    }
    return cur;
}

// Ln_n(a_1,...,a_{n-1},1; w(t)): the peeled chain with a final unit stage.
std::vector<CdNumber> tracked_ln_chain(std::vector<CdNumber> w,
                                       const std::vector<CdNumber>& a) {
    return tracked_log(tracked_peel(std::move(w), a));
}

double max_step(const std::vector<CdNumber>& values) {
    double m = 0.0;
    for (std::size_t k = 1; k < values.size(); ++k) m = std::max(m, dist(values[k], values[k - 1]));
    return m;
}

} // namespace

CdNumber delta_arg_n(const CdFunction& f, const Path& path, const std::vector<CdNumber>& a,
                     double tol) {
    int m = std::max(64, path.initial_samples);
    CdNumber prev;
    bool have_prev = false;
    while (m <= path.max_samples) {
        std::vector<CdNumber> w(static_cast<std::size_t>(m) + 1);
        par::parallel_for(w.size(), [&](std::size_t k) {
            w[k] = f(path.at(static_cast<double>(k) / m));
        });
        bool ambiguous = false;
        for (std::size_t k = 1; k < w.size(); ++k) {
            const double scale = std::max(norm(w[k]), norm(w[k - 1]));
            if (norm(w[k]) == 0.0) raise(ErrorKind::ZeroOnPath, "f vanishes on the path");
            if (dist(w[k], w[k - 1]) > scale) ambiguous = true; // angular step too coarse
        }
        std::vector<CdNumber> chain;
        if (!ambiguous) {
            chain = tracked_ln_chain(w, a);
            if (max_step(chain) > std::numbers::pi) ambiguous = true;
        }
        if (!ambiguous) {
            const CdNumber total = chain.back() - chain.front();
            if (have_prev && dist(total, prev) < tol) return total;
            prev = total;
            have_prev = true;
        }
        if (2 * m > path.max_samples) {
            if (ambiguous)
                raise(ErrorKind::UnwrapAmbiguity, "branch unwrap stayed ambiguous at the sample cap");
            raise(ErrorKind::NoConvergence, "argument variation did not settle");
        }
        m *= 2;
    }
    raise(ErrorKind::NoConvergence, "argument variation did not settle");
}

CdNumber residue_n(const CdFunction& f, const CdNumber& z0, const CdNumber& axis,
                   double rho, const std::vector<CdNumber>& a, double tol) {
    if (norm(axis) == 0.0) return CdNumber::zero(std::max(z0.level(), 2));
    const CdNumber m_unit = axis / norm(axis);
    const double m_norm = norm(axis);

    std::vector<CdNumber> chain_coeffs = a;
    chain_coeffs.push_back(CdNumber::one());

    auto loop_point = [&](double t) {
        return z0 + rho * exp_n(chain_coeffs, (kTwoPi * t) * m_unit);
    };

    const auto stieltjes_sum = [&](int m) {
        // Sample the loop at endpoints and midpoints, track the peeled
        // logarithm on the doubled grid, then take the Stieltjes sum
        // f(z0 + L(mid)) * (L(k+1) - L(k)).
        const std::size_t grid = 2 * static_cast<std::size_t>(m) + 1;
        std::vector<CdNumber> w(grid);
        par::parallel_for(grid, [&](std::size_t k) {
            w[k] = loop_point(static_cast<double>(k) / (grid - 1)) - z0;
        });
        std::vector<CdNumber> lvals = tracked_peel(std::move(w), a);
        if (max_step(lvals) > std::numbers::pi)
            raise(ErrorKind::BranchFailure, "log chain jump exceeded the unwrap threshold");
        std::vector<CdNumber> terms(static_cast<std::size_t>(m));
        par::parallel_for(terms.size(), [&](std::size_t k) {
            const CdNumber& mid = lvals[2 * k + 1];
            const CdNumber dl = lvals[2 * k + 2] - lvals[2 * k];
            terms[k] = f(z0 + mid) * dl;
        });
        return par::ordered_sum(terms) / kTwoPi;
    };

    int m = 256;
    CdNumber prev = stieltjes_sum(m);
    CdNumber prev_extrap;
    bool have_extrap = false;
    while (2 * m <= (1 << 20)) {
        m *= 2;
        const CdNumber cur = stieltjes_sum(m);
        const CdNumber extrap = (4.0 * cur - prev) / 3.0;
        if (have_extrap && dist(extrap, prev_extrap) < tol) return m_norm * extrap;
        prev = cur;
        prev_extrap = extrap;
        have_extrap = true;
    }
    raise(ErrorKind::NoConvergence, "n-residue did not settle within the sample cap");
}

namespace {

long long gcd_ll(long long a, long long b) { return b == 0 ? a : gcd_ll(b, a % b); }

void rational_estimate(double x, long& num, long& den, long max_den = 64) {
    long best_num = std::lround(x);
    long best_den = 1;
    double best_err = std::fabs(x - static_cast<double>(best_num));
    for (long d = 2; d <= max_den; ++d) {
        const long n = std::lround(x * static_cast<double>(d));
        const double err = std::fabs(x - static_cast<double>(n) / static_cast<double>(d));
        if (err < best_err - 1e-12) {
            best_err = err;
            best_num = n;
            best_den = d;
        }
    }
    const long long g = gcd_ll(std::llabs(best_num), best_den);
    num = g ? best_num / g : best_num;
    den = g ? best_den / static_cast<long>(g) : best_den;
}

} // namespace

ArgRatio surface_arg_ratio(const CdFunction& f, const CdNumber& z0, double rho_plus,
                           double rho_minus, int n, const std::vector<CdNumber>& a,
                           double omega_radius, double tol) {
    if (!(rho_minus > 0.0 && rho_minus < rho_plus))
        raise(ErrorKind::ZeroArgument, "need 0 < rho_minus < rho_plus");
    const int level = std::max(2, z0.level());
    const CdNumber re_part = CdNumber::real(re(z0)).embedded(level);

    // Outer loop and reversed inner loop from the iterated exponential, with
    // the leading angle driven around a full turn.
    std::vector<CdNumber> chain = a;
    while (static_cast<int>(chain.size()) < n - 1) chain.push_back(CdNumber::one());
    chain.resize(static_cast<std::size_t>(std::max(0, n - 1)));

    auto surface_loop = [&](double rho, bool reversed) {
        Path p;
        p.closed = true;
        p.initial_samples = 512;
        p.map = [=](double t) {
            const double s = reversed ? 1.0 - t : t;
            CdNumber xi = exp_cd((kTwoPi * s) * embed(CdNumber::generator(level == 2 ? 3 : 4), level));
            if (chain.empty()) return re_part + rho * xi;
            return re_part + rho * exp_n(chain, xi);
        };
        return p;
    };

    const Path outer = surface_loop(rho_plus, false);
    const Path inner = surface_loop(rho_minus, true);
    const Path join = Path::segment(outer.at(0.0), inner.at(0.0));
    Path gamma = Path::concat({outer, join, inner, join.reversed()});
    gamma.closed = true;
    gamma.initial_samples = 2048;

    ArgRatio out;
    out.delta_gamma = delta_arg_n(f, gamma, chain, tol);

    const Path omega = Path::circle(z0, omega_radius, CdNumber::generator(1));
    out.delta_omega = delta_arg_n(f, omega, {}, tol);

    const double dom = norm(out.delta_omega);
    out.p_raw = dom > 0.0 ? norm(out.delta_gamma) / dom : 0.0;
    rational_estimate(out.p_raw, out.p_num, out.p_den);
    if (norm(out.delta_gamma) > 0.0 && dom > 0.0) {
        out.K = (out.delta_gamma * inverse(out.delta_omega)) / out.p_raw;
    } else {
        out.K = CdNumber::zero(level);
    }
    return out;
}

} // namespace cd
