#pragma once

#include <vector>

#include "gitstab/types.hpp"

namespace gitstab {

/// Number of monomials of the signature's multidegree: prod binom(m_i+k_i, k_i).
Int monomial_count(const SpaceSignature& sig);

/// Every exponent vector with per-block degree sums equal to the signature's
/// degrees, in canonical order: descending lexicographic on the concatenated
/// exponent tuple.
std::vector<ExponentVector> enumerate_monomials(const SpaceSignature& sig);

/// Torus weight <I, lambda> of a monomial: exact integer inner product of the
/// concatenated exponent and weight vectors.
Int pairing(const ExponentVector& I, const OneParamSubgroup& lambda);

/// Same pairing against raw (possibly unsorted, non-primitive) weight blocks.
Int pairing_raw(const ExponentVector& I, const std::vector<std::vector<Int>>& weights);

/// Hilbert-Mumford function: minimum weight over a nonempty support.
Int mu(const std::vector<ExponentVector>& support, const OneParamSubgroup& lambda);

Int mu_raw(const std::vector<ExponentVector>& support,
           const std::vector<std::vector<Int>>& weights);

/// Drop the last exponent of each block; injective on the monomials of a
/// fixed signature.
LatticePoint xi_project(const SpaceSignature& sig, const ExponentVector& I);

/// The centroid: degrees[t]/(dims[t]+1) repeated dims[t] times per factor.
RationalPoint centroid(const SpaceSignature& sig);

}  // namespace gitstab
