#include "gitstab/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gitstab/lattice.hpp"
#include "gitstab/oneps.hpp"
#include "gitstab/parallel.hpp"

namespace gitstab {

std::string verdict_name(const CentroidVerdict& v) {
    if (!v.contains) return "unstable";
    if (!v.interior) return "strictly semistable (boundary)";
    return "stable";
}

StabilityReport classify(const SpaceSignature& sig, const ClassifyOptions& options) {
    StabilityReport report{sig, {}, {}, {}, false, 0, 0};
    report.fundamental = fundamental_set(sig);

    auto noplus = parallel_map(
        report.fundamental, [&](const OneParamSubgroup& l) { return n_oplus(l, sig); },
        options.parallel);
    auto nplus = parallel_map(
        report.fundamental, [&](const OneParamSubgroup& l) { return n_plus(l, sig); },
        options.parallel);

    auto max_semi = maximal_families(noplus);
    auto max_dest = maximal_families(nplus);
    report.pre_dedup_semistable = static_cast<int>(max_semi.size());
    report.pre_dedup_unstable = static_cast<int>(max_dest.size());

    if (options.dedup_symmetry && factor_symmetries(sig).size() > 1) {
        report.symmetry_deduped = true;
        max_semi = factor_swap_dedup(max_semi, sig);
        max_dest = factor_swap_dedup(max_dest, sig);
    }

    report.semistable = parallel_map(
        max_semi,
        [&](const MonomialFamily& fam) {
            SemistableEntry entry{fam, centroid_classify(sig, fam.support), std::nullopt};
            if (entry.verdict.contains && !fam.lambdas.empty())
                entry.annihilator = ann(fam.lambdas.front(), sig);
            return entry;
        },
        options.parallel);
    report.unstable.reserve(max_dest.size());
    for (auto& fam : max_dest) report.unstable.push_back(DestabEntry{std::move(fam)});
    return report;
}

std::vector<BlockPermutation> block_permutations(const SpaceSignature& sig) {
    std::vector<std::vector<std::vector<int>>> per_factor;
    per_factor.reserve(static_cast<size_t>(sig.factors()));
    for (int t = 0; t < sig.factors(); ++t) {
        std::vector<int> p(static_cast<size_t>(sig.block_size(t)));
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::vector<int>> all;
        do all.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        per_factor.push_back(std::move(all));
    }
    std::vector<BlockPermutation> out;
    std::vector<size_t> idx(per_factor.size(), 0);
    while (true) {
        BlockPermutation combo;
        combo.reserve(per_factor.size());
        for (size_t t = 0; t < per_factor.size(); ++t) combo.push_back(per_factor[t][idx[t]]);
        out.push_back(std::move(combo));
        size_t t = per_factor.size();
        while (t > 0) {
            --t;
            if (++idx[t] < per_factor[t].size()) break;
            idx[t] = 0;
            if (t == 0) return out;
        }
    }
}

ExponentVector apply_block_permutation(const SpaceSignature& sig, const ExponentVector& I,
                                       const BlockPermutation& perm) {
    std::vector<int> exps(I.size());
    for (int t = 0; t < sig.factors(); ++t) {
        int off = sig.block_offset(t);
        const auto& p = perm[static_cast<size_t>(t)];
        for (int i = 0; i < sig.block_size(t); ++i)
            exps[static_cast<size_t>(off + i)] =
                I[static_cast<size_t>(off + p[static_cast<size_t>(i)])];
    }
    return ExponentVector::checked(sig, std::move(exps));
}

namespace {

std::string dump_support(const SpaceSignature& sig,
                         const std::vector<ExponentVector>& support) {
    std::ostringstream os;
    for (const auto& I : support) os << " " << I.to_string(sig);
    return os.str();
}

}  // namespace

SupportCheck check_support(const SpaceSignature& sig,
                           const std::vector<ExponentVector>& support,
                           const ClassifyOptions& options) {
    if (support.empty()) throw validation_error("empty support");
    MonomialFamily fam = make_family(sig, FamilyKind::UserSupplied, {}, support);

    SupportCheck out{fam, centroid_classify(sig, fam.support), {}};

    const auto fund = fundamental_set(sig);
    const auto perms = block_permutations(sig);
    auto per_perm = parallel_map(
        perms,
        [&](const BlockPermutation& perm) {
            std::vector<ExponentVector> moved;
            moved.reserve(fam.support.size());
            for (const auto& I : fam.support)
                moved.push_back(apply_block_permutation(sig, I, perm));
            std::vector<SupportWitness> ws;
            for (const auto& lambda : fund) {
                Int m = mu(moved, lambda);
                if (m >= 0) ws.push_back(SupportWitness{perm, lambda, std::move(m)});
            }
            return ws;
        },
        options.parallel);
    for (auto& ws : per_perm)
        out.witnesses.insert(out.witnesses.end(), std::make_move_iterator(ws.begin()),
                             std::make_move_iterator(ws.end()));

    bool any_pos = std::any_of(out.witnesses.begin(), out.witnesses.end(),
                               [](const SupportWitness& w) { return w.mu_value > 0; });
    bool any_nonneg = !out.witnesses.empty();
    // The polyhedral and the finite search views must coincide.
    if (any_pos != !out.verdict.contains || any_nonneg != !out.verdict.interior) {
        std::ostringstream os;
        os << "centroid and weight-search views disagree on" << dump_support(sig, fam.support)
           << " [contains=" << out.verdict.contains << " interior=" << out.verdict.interior
           << " witnesses=" << out.witnesses.size() << " positive=" << any_pos << "]";
        throw internal_error(os.str());
    }
    return out;
}

}  // namespace gitstab
