#pragma once

#include <string>
#include <vector>

#include "gitstab/types.hpp"

namespace gitstab {

/// Newton-polygon picture of a support with projected dimension 2: lattice
/// dots for the projected monomials, the exact convex hull polygon, and the
/// centroid marked in red. Output bytes are deterministic; the decimal
/// conversion here is the only place rationals leave exact form.
std::string render_plot(const SpaceSignature& sig,
                        const std::vector<ExponentVector>& support);

/// Fixed-point decimal rendering of an exact rational (round half away from
/// zero at 6 digits, trailing zeros trimmed). Pure integer arithmetic.
std::string rat_to_decimal(const Rat& r);

}  // namespace gitstab
