#pragma once

#include <vector>

#include "gitstab/types.hpp"

namespace gitstab {

/// Weyl-sort each block non-increasing, clear denominators, divide by the
/// common content: the normalised primitive representative of a rational
/// weight vector. Blocks must each sum to zero and not all vanish.
OneParamSubgroup normalize(const SpaceSignature& sig,
                           const std::vector<std::vector<Rat>>& raw);

OneParamSubgroup normalize_int(const SpaceSignature& sig,
                               const std::vector<std::vector<Int>>& raw);

/// Primitive sign-canonical difference vectors I - I' over all unordered
/// pairs of distinct monomials, deduplicated. These are the walls on which
/// the Hilbert-Mumford function fails to be linear.
std::vector<HyperplaneNormal> hyperplane_normals(const SpaceSignature& sig);

/// The finite fundamental set of normalised one-parameter subgroups:
/// for every wall subset cutting the weight space (modulo the blockwise
/// zero-sum relations) down to a line, the primitive normalised generator of
/// that line, collected over all normalization choices and deduplicated.
/// Canonically sorted (ascending lex on weight blocks).
std::vector<OneParamSubgroup> fundamental_set(const SpaceSignature& sig);

}  // namespace gitstab
