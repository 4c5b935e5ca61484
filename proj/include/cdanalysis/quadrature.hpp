#pragma once

#include <functional>

#include "cdanalysis/algebra.hpp"
#include "cdanalysis/parallel.hpp"

namespace cd {

using RealToCd = std::function<CdNumber(double)>;

struct QuadOptions {
    double tol = 1e-10;
    int max_depth = 22;
};

/// Adaptive Gauss-Kronrod 7-15 on [a, b]; deterministic left-first
/// subdivision. Throws QuadratureFailure when the depth cap is hit with the
/// error estimate still above tolerance.
CdNumber integrate_adaptive(const RealToCd& f, double a, double b,
                            const QuadOptions& opts = {});

/// Non-adaptive GK15 over a fixed uniform panel grid; panels evaluate in
/// parallel and reduce in index order, so results are thread-count
/// independent.
CdNumber integrate_panels(const RealToCd& f, double a, double b, int panels,
                          par::ExecMode mode = par::default_mode());

} // namespace cd
