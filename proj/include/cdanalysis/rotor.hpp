#pragma once

#include <vector>

#include "cdanalysis/algebra.hpp"

namespace cd {

/// Families of the rotation construction: (1,b) transports complex points,
/// (2,3) transports quaternion points into the octonions.
struct RotationPair {
    int r = 1;
    int b = 2;
};

/// Algebra automorphism of H or O fixing R, stored as the images of the
/// imaginary generators. Images are unit, purely imaginary, pairwise
/// orthogonal, and multiplicative over the generator table.
class RotationAutomorphism {
public:
    static RotationAutomorphism identity(int level);

    /// Builds the automorphism determined by a frame seed: images[j-1] is the
    /// image of i_j. Validates orthonormality and multiplicativity.
    static RotationAutomorphism from_images(int level, std::vector<CdNumber> images);

    int level() const noexcept { return level_; }
    const CdNumber& image(int j) const; // image of i_j, 1 <= j < 2^level

    CdNumber apply(const CdNumber& w) const;

    /// Determinant of the induced real matrix on the full 2^b shadow; +1 for
    /// every valid instance.
    double shadow_determinant() const;

    bool is_identity(const Tolerance& tol = default_tolerance()) const;

private:
    RotationAutomorphism(int level, std::vector<CdNumber> images)
        : level_(level), images_(std::move(images)) {}
    void validate() const;

    int level_;
    std::vector<CdNumber> images_;
};

/// Rotation family member for the given pair. For (1,b) the image of i1 is
/// the axis of Im z (identity when Im z vanishes); the rest of the frame is
/// completed deterministically by Gram-Schmidt over the candidate sequence
/// i2, i3, ... and closed under generator products. Requires Re z = Re x.
RotationAutomorphism build_rotation(const CdNumber& z, const CdNumber& x,
                                    RotationPair pair);

/// Convenience overload: pair inferred as (1, max(2, level z)).
RotationAutomorphism build_rotation(const CdNumber& z, const CdNumber& x);

/// Canonical partner: the element of A_r with the same real part and
/// imaginary norm, with its imaginary part along i1 (r = 1) resp. the i1
/// axis inside H (r = 2).
CdNumber find_partner(const CdNumber& z, int r = 1);

/// Tolerance used for the Re z = Re x precondition.
inline constexpr double re_match_tolerance = 1e-9;

} // namespace cd
