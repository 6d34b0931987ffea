#pragma once

#include <vector>

#include "gitstab/types.hpp"

namespace gitstab {

enum class FamilyKind { NPlus, NOplus, Ann, UserSupplied };

std::string family_kind_name(FamilyKind k);

/// A set of monomials tagged with its origin. Supports are kept sorted in
/// canonical (descending lex) order without duplicates.
struct MonomialFamily {
    SpaceSignature sig;
    FamilyKind kind;
    std::vector<OneParamSubgroup> lambdas;  // origins, canonically sorted
    std::vector<ExponentVector> support;
};

MonomialFamily make_family(const SpaceSignature& sig, FamilyKind kind,
                           std::vector<OneParamSubgroup> lambdas,
                           std::vector<ExponentVector> support);

/// Monomials of strictly positive weight against lambda.
MonomialFamily n_plus(const OneParamSubgroup& lambda, const SpaceSignature& sig);
/// Monomials of nonnegative weight.
MonomialFamily n_oplus(const OneParamSubgroup& lambda, const SpaceSignature& sig);
/// Monomials of weight zero: the annihilator, N_oplus minus N_plus.
MonomialFamily ann(const OneParamSubgroup& lambda, const SpaceSignature& sig);
/// Monomials of strictly negative weight (completes the partition of Xi).
MonomialFamily n_minus(const OneParamSubgroup& lambda, const SpaceSignature& sig);

/// Canonical ordering of supports: position by position in canonical
/// monomial order, families whose leading monomials come earlier sort first.
bool support_order_less(const std::vector<ExponentVector>& a,
                        const std::vector<ExponentVector>& b);

/// Keep exactly the families whose support is not strictly contained in
/// another input family's support; equal supports collapse to one entry with
/// merged origins. Idempotent and order-independent.
std::vector<MonomialFamily> maximal_families(const std::vector<MonomialFamily>& families);

/// Factor permutations fixing dims and degrees (identity included).
std::vector<std::vector<int>> factor_symmetries(const SpaceSignature& sig);

/// Group families into orbits under factor relabeling and keep one canonical
/// representative (least support in canonical order) per orbit.
std::vector<MonomialFamily> factor_swap_dedup(const std::vector<MonomialFamily>& families,
                                              const SpaceSignature& sig);

bool is_subset_of_family(const std::vector<ExponentVector>& support,
                         const MonomialFamily& family);

}  // namespace gitstab
