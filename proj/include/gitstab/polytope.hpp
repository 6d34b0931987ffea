#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gitstab/types.hpp"

namespace gitstab {

/// Rank of {p_i - p_0} by exact Gaussian elimination; 0 for a single point.
int affine_rank(const std::vector<RationalPoint>& points);

struct ContainsResult {
    bool contains = false;
    /// Nonnegative weights summing to 1 that reproduce q (iff contains).
    std::optional<std::vector<Rat>> weights;
    /// Separator with value 0 at q and > 0 at every input point (iff not).
    std::optional<AffineFunctional> separator;
};

/// Exact convex-hull membership of q, with certificate either way.
ContainsResult contains(const std::vector<RationalPoint>& points, const RationalPoint& q);

/// Membership in the relative interior: some representation with all weights
/// strictly positive after merging duplicate points. Decided by the exact LP
/// maximizing the least weight.
bool relint_contains(const std::vector<RationalPoint>& points, const RationalPoint& q);

/// Interior membership: relative interior plus full affine rank `dim`.
bool interior_contains(const std::vector<RationalPoint>& points, const RationalPoint& q,
                       int dim);

struct CentroidVerdict {
    bool contains = false;
    bool interior = false;
    std::optional<std::vector<Rat>> weights;        // present iff contains
    std::optional<AffineFunctional> separator;      // present iff !contains
};

/// The Centroid Criterion applied to a support: semistable iff the centroid
/// lies in the hull of the projected support, stable iff in its interior.
CentroidVerdict centroid_classify(const SpaceSignature& sig,
                                  const std::vector<ExponentVector>& support);

/// Destabilizing integer weights of a separator functional vanishing at the
/// centroid: pairing(I, weights) = C * Phi(xi(I)) for every monomial I, where
/// C is a fixed positive integer. Blocks are zero-sum but unsorted.
std::vector<std::vector<Int>> functional_to_raw_weights(const SpaceSignature& sig,
                                                        const AffineFunctional& phi);

/// The raw weights above, Weyl-sorted and made primitive.
OneParamSubgroup functional_to_oneps(const SpaceSignature& sig,
                                     const AffineFunctional& phi);

/// The affine functional with value(xi(I)) = <I, lambda> for every monomial
/// and value(centroid) = 0.
AffineFunctional oneps_to_functional(const SpaceSignature& sig,
                                     const OneParamSubgroup& lambda);

/// Convex hull vertices of a planar point set, counterclockwise starting at
/// the lexicographically least vertex. Collinear interior points dropped.
std::vector<RationalPoint> hull2d(const std::vector<RationalPoint>& points);

/// Extreme points of a point set in any dimension (each decided by an exact
/// membership LP against the others), sorted.
std::vector<RationalPoint> extreme_points(const std::vector<RationalPoint>& points);

RationalPoint to_rational(const LatticePoint& p);

std::vector<RationalPoint> project_support(const SpaceSignature& sig,
                                           const std::vector<ExponentVector>& support);

}  // namespace gitstab
