#include "cdanalysis/quadrature.hpp"

#include <cmath>
#include <vector>

namespace cd {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct PanelResult {
    CdNumber kronrod;
    double err;
};

PanelResult gk15(const RealToCd& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    CdNumber fc = f(mid);
    CdNumber resk = kWgk[7] * fc;
    CdNumber resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const CdNumber lo = f(mid - dx);
        const CdNumber hi = f(mid + dx);
        const CdNumber sum = lo + hi;
        resk += kWgk[j] * sum;
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    PanelResult out;
    out.kronrod = half * resk;
    out.err = half * dist(resk, resg) * 8.0; // coarse but safe scaling
    return out;
}

} // namespace

CdNumber integrate_adaptive(const RealToCd& f, double a, double b, const QuadOptions& opts) {
    struct Segment {
        double a, b, tol;
        int depth;
    };
    std::vector<Segment> stack{{a, b, opts.tol, 0}};
    CdNumber total;
    while (!stack.empty()) {
        const Segment seg = stack.back();
        stack.pop_back();
        const PanelResult r = gk15(f, seg.a, seg.b);
        if (r.err <= seg.tol || seg.depth >= opts.max_depth) {
            if (r.err > seg.tol)
                raise(ErrorKind::QuadratureFailure,
                      "adaptive quadrature hit its depth cap before the tolerance");
            total += r.kronrod;
            continue;
        }
        const double mid = 0.5 * (seg.a + seg.b);
        // Push right first so the left half is processed next (fixed order).
        stack.push_back({mid, seg.b, 0.5 * seg.tol, seg.depth + 1});
        stack.push_back({seg.a, mid, 0.5 * seg.tol, seg.depth + 1});
    }
    return total;
}

CdNumber integrate_panels(const RealToCd& f, double a, double b, int panels,
                          par::ExecMode mode) {
    if (panels < 1) panels = 1;
    const double h = (b - a) / panels;
    std::vector<CdNumber> parts(static_cast<std::size_t>(panels));
    par::parallel_for(parts.size(), [&](std::size_t k) {
        parts[k] = gk15(f, a + h * static_cast<double>(k), a + h * static_cast<double>(k + 1))
                       .kronrod;
    }, mode);
    return par::ordered_sum(parts);
}

} // namespace cd
