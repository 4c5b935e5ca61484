#include "cdanalysis/rotor.hpp"

#include <algorithm>
#include <cmath>

#include "cdanalysis/transcend.hpp"

namespace cd {

namespace {

double dot(const CdNumber& a, const CdNumber& b) {
    double s = 0.0;
    const int n = std::max(a.dim(), b.dim());
    for (int j = 0; j < n; ++j) s += a.coeff(j) * b.coeff(j);
    return s;
}

// First candidate direction with a usable component orthogonal to the chosen
// images. The 1e-3 floor makes the selection deterministic; the switch set
// between candidates has measure zero.
CdNumber gram_schmidt_pick(const std::vector<CdNumber>& chosen,
                           const std::vector<int>& candidates, int level) {
    for (int c : candidates) {
        CdNumber v = embed(CdNumber::generator(c), level);
        for (const CdNumber& u : chosen) v -= dot(v, u) * u;
        const double n = norm(v);
        if (n > 1e-3) return v / n;
    }
    raise(ErrorKind::EvaluationFailure, "no orthogonal completion candidate survived");
}

bool lies_in_sublevel(const CdNumber& z, int r, double tol) {
    for (int j = 1 << r; j < z.dim(); ++j) {
        if (std::fabs(z.coeff(j)) > tol) return false;
    }
    return true;
}

std::vector<int> default_candidates(int level) {
    std::vector<int> c;
    for (int j = 2; j < (1 << level); ++j) c.push_back(j);
    c.push_back(1);
    return c;
}

} // namespace

RotationAutomorphism RotationAutomorphism::identity(int level) {
    std::vector<CdNumber> images;
    for (int j = 1; j < (1 << level); ++j) images.push_back(embed(CdNumber::generator(j), level));
    return RotationAutomorphism(level, std::move(images));
}

RotationAutomorphism RotationAutomorphism::from_images(int level, std::vector<CdNumber> images) {
    if (level < 2 || level > 3)
        raise(ErrorKind::LevelMismatch, "rotation automorphisms live on levels 2 and 3");
    if (images.size() != static_cast<std::size_t>((1 << level) - 1))
        throw std::invalid_argument("rotation automorphism: wrong image count");
    for (auto& v : images) v = embed(v, level);
    RotationAutomorphism rot(level, std::move(images));
    rot.validate();
    return rot;
}

void RotationAutomorphism::validate() const {
    const double tol = 1e-9;
    const GeneratorTable& table = generator_table(level_);
    const int n = 1 << level_;
    for (int j = 1; j < n; ++j) {
        const CdNumber& v = image(j);
        if (std::fabs(norm(v) - 1.0) > tol || std::fabs(re(v)) > tol)
            throw std::invalid_argument("rotation automorphism: image not unit imaginary");
        for (int k = j + 1; k < n; ++k) {
            if (std::fabs(dot(v, image(k))) > tol)
                throw std::invalid_argument("rotation automorphism: images not orthogonal");
        }
    }
    for (int j = 1; j < n; ++j) {
        for (int k = 1; k < n; ++k) {
            const CdNumber lhs = image(j) * image(k);
            const int idx = table.index(j, k);
            const CdNumber rhs = idx == 0
                                     ? CdNumber::real(table.sign(j, k)).embedded(level_)
                                     : table.sign(j, k) * image(idx);
            if (dist(lhs, rhs) > 1e-8)
                throw std::invalid_argument("rotation automorphism: images not multiplicative");
        }
    }
}

const CdNumber& RotationAutomorphism::image(int j) const {
    if (j < 1 || j >= (1 << level_))
        raise(ErrorKind::IndexOutOfRange, "generator index out of range");
    return images_[static_cast<std::size_t>(j - 1)];
}

CdNumber RotationAutomorphism::apply(const CdNumber& w) const {
    if (w.level() > level_)
        raise(ErrorKind::LevelMismatch, "argument level exceeds automorphism level");
    CdNumber out = CdNumber::real(re(w)).embedded(level_);
    for (int j = 1; j < w.dim(); ++j) {
        const double c = w.coeff(j);
        if (c != 0.0) out += c * image(j);
    }
    return out;
}

double RotationAutomorphism::shadow_determinant() const {
    const int n = 1 << level_;
    double m[8][8] = {};
    m[0][0] = 1.0;
    for (int j = 1; j < n; ++j) {
        for (int row = 0; row < n; ++row) m[row][j] = image(j).coeff(row);
    }
    // LU with partial pivoting.
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
        }
        if (std::fabs(m[pivot][col]) < 1e-14) return 0.0;
        if (pivot != col) {
            std::swap_ranges(m[pivot], m[pivot] + n, m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < n; ++row) {
            const double f = m[row][col] / m[col][col];
            for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

bool RotationAutomorphism::is_identity(const Tolerance& tol) const {
    for (int j = 1; j < (1 << level_); ++j) {
        if (!approx_eq(image(j), embed(CdNumber::generator(j), level_), tol)) return false;
    }
    return true;
}

namespace {

// Multiplicative orthonormal frame of Im(A_r) built on a leading axis:
// (u, u2, u*u2) for quaternions, just (u) for the complex case.
std::vector<CdNumber> subframe_on_axis(const CdNumber& u, int r, int level,
                                       const std::vector<int>& candidates) {
    std::vector<CdNumber> frame{u};
    if (r >= 2) {
        frame.push_back(gram_schmidt_pick(frame, candidates, level));
        frame.push_back(frame[0] * frame[1]);
    }
    return frame;
}

RotationAutomorphism complete_frame(int level, std::vector<CdNumber> images,
                                    const std::vector<int>& candidates) {
    // images holds the forced images of i1 (and i2, i3 when present); extend
    // by a doubling generator and close under products.
    if (images.size() == 1) {
        images.push_back(gram_schmidt_pick(images, candidates, level));
        images.push_back(images[0] * images[1]);
    }
    if (level == 3) {
        images.push_back(gram_schmidt_pick(images, candidates, level)); // i4
        images.push_back(images[0] * images[3]);                        // i5
        images.push_back(images[1] * images[3]);                        // i6
        images.push_back(images[2] * images[3]);                        // i7
    }
    return RotationAutomorphism::from_images(level, std::move(images));
}

} // namespace

RotationAutomorphism build_rotation(const CdNumber& z, const CdNumber& x, RotationPair pair) {
    const int r = pair.r;
    const int b = pair.b;
    if (!(1 <= r && r < b && b <= 3))
        raise(ErrorKind::LevelMismatch, "rotation pair must satisfy 1 <= r < b <= 3");
    if (z.level() > b) raise(ErrorKind::LevelMismatch, "z exceeds target level");
    if (!lies_in_sublevel(x, r, re_match_tolerance))
        raise(ErrorKind::LevelMismatch, "x does not lie in the declared subalgebra");
    if (std::fabs(re(z) - re(x)) > re_match_tolerance)
        raise(ErrorKind::RePartMismatch, "rotation requires Re z = Re x");

    const CdNumber zb = embed(z, b);
    if (lies_in_sublevel(zb, r, axis_epsilon) || norm(im(zb)) < axis_epsilon)
        return RotationAutomorphism::identity(b);

    const CdNumber target_axis = axis_of(zb);

    std::vector<int> candidates = default_candidates(b);
    if (r == 2 && b == 3) candidates = {3, 4, 6, 2, 5, 7, 1};

    // Target frame led by the axis of Im z.
    std::vector<CdNumber> target = subframe_on_axis(target_axis, r, b, candidates);

    const CdNumber xb = embed(x, b);
    const CdNumber xim = im(xb);
    if (r == 1) {
        // Image of i1; the sign convention transports x to z when the
        // imaginary norms agree.
        const double x1 = xb.coeff(1);
        CdNumber m = target[0];
        if (x1 < 0.0) m = -m;
        return complete_frame(b, {m}, candidates);
    }

    // r == 2: map the source frame (u, u2, u u2) onto the target frame.
    if (norm(xim) < axis_epsilon) {
        return complete_frame(b, {target[0], target[1], target[2]}, candidates);
    }
    const CdNumber u = xim / norm(xim);
    std::vector<int> source_candidates = {1, 2, 3};
    std::vector<CdNumber> source = subframe_on_axis(embed(u, b), r, b, source_candidates);

    std::vector<CdNumber> images;
    for (int j = 1; j < (1 << r); ++j) {
        CdNumber img = CdNumber::zero(b);
        const CdNumber gen = embed(CdNumber::generator(j), b);
        for (std::size_t k = 0; k < source.size(); ++k) {
            img += dot(gen, source[k]) * target[k];
        }
        images.push_back(img);
    }
    return complete_frame(b, std::move(images), candidates);
}

RotationAutomorphism build_rotation(const CdNumber& z, const CdNumber& x) {
    return build_rotation(z, x, RotationPair{1, std::max(2, z.level())});
}

CdNumber find_partner(const CdNumber& z, int r) {
    if (r < 1 || r > 2) raise(ErrorKind::LevelMismatch, "partner subalgebra must be C or H");
    const double imag = norm(im(z));
    CdNumber x = CdNumber::zero(r);
    x.set_coeff(0, re(z));
    x.set_coeff(1, imag < axis_epsilon ? 0.0 : imag);
    return x;
}

} // namespace cd
