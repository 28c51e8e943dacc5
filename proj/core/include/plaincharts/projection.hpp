#pragma once

#include <plaincharts/geometry.hpp>

#include <cstdint>
#include <vector>

namespace plaincharts {

/// A linear map from the source affine space of Z to the image space of
/// dimension dim(Z) + 1, given by an m x n matrix of full rank m.
struct LinearProjection {
    std::vector<std::vector<Rational>> matrix; // m rows, n columns

    std::size_t m() const { return matrix.size(); }
    std::size_t n() const { return matrix.empty() ? 0 : matrix[0].size(); }

    static LinearProjection identity(std::size_t n);
    RationalPoint apply(const RationalPoint& x) const;
};

/// Rank over the rationals, by Gaussian elimination.
std::size_t matrix_rank(const std::vector<std::vector<Rational>>& matrix);

/// The image hypersurface H of Z under a projection, with the local
/// inverse map back onto Z near the distinguished points.
struct HypersurfaceModel {
    Polynomial H;         // in the image ring, monic
    RationalMap inverse;  // alpha: patch W of the hypersurface -> source
    RationalPoint base_point;  // q on Z
    RationalPoint image_point; // p = pi(q) on H
};

/// The single monic generator of the image ideal of Z under proj, in a
/// fresh image ring u1..um. Throws ValidationError when the image is not
/// a hypersurface (the degeneracy signal for resampling).
Polynomial implicitize(const Ideal& Z, const LinearProjection& proj);

/// The inverse of proj restricted to Z, near q: each source coordinate is
/// read off a block-order Groebner basis of the graph ideal as an element
/// d(u)*x_l - n(u) with d nonzero at pi(q). The denominators cut out the
/// patch W. Throws ValidationError when some coordinate has no such
/// element (projection not birational at q).
RationalMap local_inverse(const Ideal& Z, const LinearProjection& proj,
                          const RationalPoint& q);

/// implicitize + local_inverse bundled with the two distinguished points.
HypersurfaceModel hypersurface_model(const Ideal& Z, const LinearProjection& proj,
                                     const RationalPoint& q);

/// True iff (a) alpha after pi is the identity on Z localized at the
/// pulled-back denominators, (b) every generator of Z pulled back along
/// alpha lies in (H) localized on W, and (c) H vanishes at the image
/// point with a nonvanishing gradient there. Never throws.
bool verify_local_iso(const Ideal& Z, const LinearProjection& proj,
                      const HypersurfaceModel& model);

/// Samples integer matrices with entries in [-100, 100] from the seed
/// until one passes hypersurface_model + verify_local_iso, up to 20
/// tries; q must lie on Z and Z must be smooth there. A square projection
/// returns the identity immediately. Throws ValidationError with the last
/// failure mode once the budget is exhausted.
LinearProjection generic_projection(const Ideal& Z, int dim_Z,
                                    const RationalPoint& q, std::uint64_t seed);

} // namespace plaincharts
