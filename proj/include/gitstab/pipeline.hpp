#pragma once

#include <optional>
#include <vector>

#include "gitstab/destab.hpp"
#include "gitstab/polytope.hpp"
#include "gitstab/types.hpp"

namespace gitstab {

struct ClassifyOptions {
    bool dedup_symmetry = true;
    bool parallel = true;
};

/// A maximal semi-destabilised family with its centroid verdict; the
/// annihilator is recorded exactly when the verdict is contains = true.
struct SemistableEntry {
    MonomialFamily family;  // N0+ support, origins in lambdas
    CentroidVerdict verdict;
    std::optional<MonomialFamily> annihilator;
};

struct DestabEntry {
    MonomialFamily family;  // N+ support
};

struct StabilityReport {
    SpaceSignature sig;
    std::vector<OneParamSubgroup> fundamental;
    std::vector<SemistableEntry> semistable;  // maximal N0+ families
    std::vector<DestabEntry> unstable;        // maximal N+ families
    bool symmetry_deduped = false;
    int pre_dedup_semistable = 0;
    int pre_dedup_unstable = 0;
};

/// Fundamental set -> all N0+/N+ -> maximal families per list -> optional
/// factor symmetry dedup -> centroid verdict and annihilator per semistable
/// family. Deterministic and canonically ordered.
StabilityReport classify(const SpaceSignature& sig, const ClassifyOptions& options = {});

/// A per-block coordinate permutation: entry t permutes the coordinates of
/// factor t's exponent block.
using BlockPermutation = std::vector<std::vector<int>>;

std::vector<BlockPermutation> block_permutations(const SpaceSignature& sig);

ExponentVector apply_block_permutation(const SpaceSignature& sig, const ExponentVector& I,
                                       const BlockPermutation& perm);

struct SupportWitness {
    BlockPermutation perm;
    OneParamSubgroup lambda;
    Int mu_value;
};

struct SupportCheck {
    MonomialFamily support;
    CentroidVerdict verdict;
    /// Every (permutation, lambda) with mu(perm . support, lambda) >= 0.
    std::vector<SupportWitness> witnesses;
};

/// Centroid verdict for a support plus the exhaustive finite search over
/// (per-block permutations) x (fundamental set). The two views must agree;
/// disagreement raises internal_error.
SupportCheck check_support(const SpaceSignature& sig,
                           const std::vector<ExponentVector>& support,
                           const ClassifyOptions& options = {});

/// Verdict wording shared by report and check output.
std::string verdict_name(const CentroidVerdict& v);

}  // namespace gitstab
