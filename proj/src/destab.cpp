#include "gitstab/destab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "gitstab/lattice.hpp"

namespace gitstab {

std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::NPlus: return "N+";
        case FamilyKind::NOplus: return "N0+";
        case FamilyKind::Ann: return "Ann";
        case FamilyKind::UserSupplied: return "user";
    }
    return "?";
}

namespace {
const auto kCanonicalLess = [](const ExponentVector& a, const ExponentVector& b) {
    return b < a;  // descending lex
};
}  // namespace

MonomialFamily make_family(const SpaceSignature& sig, FamilyKind kind,
                           std::vector<OneParamSubgroup> lambdas,
                           std::vector<ExponentVector> support) {
    std::sort(support.begin(), support.end(), kCanonicalLess);
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    return MonomialFamily{sig, kind, std::move(lambdas), std::move(support)};
}

namespace {

template <typename Pred>
MonomialFamily filter_family(const OneParamSubgroup& lambda, const SpaceSignature& sig,
                             FamilyKind kind, Pred keep) {
    std::vector<ExponentVector> support;
    for (auto& I : enumerate_monomials(sig))
        if (keep(pairing(I, lambda))) support.push_back(std::move(I));
    return make_family(sig, kind, {lambda}, std::move(support));
}

}  // namespace

MonomialFamily n_plus(const OneParamSubgroup& lambda, const SpaceSignature& sig) {
    return filter_family(lambda, sig, FamilyKind::NPlus, [](const Int& w) { return w > 0; });
}

MonomialFamily n_oplus(const OneParamSubgroup& lambda, const SpaceSignature& sig) {
    return filter_family(lambda, sig, FamilyKind::NOplus, [](const Int& w) { return w >= 0; });
}

MonomialFamily ann(const OneParamSubgroup& lambda, const SpaceSignature& sig) {
    return filter_family(lambda, sig, FamilyKind::Ann, [](const Int& w) { return w == 0; });
}

MonomialFamily n_minus(const OneParamSubgroup& lambda, const SpaceSignature& sig) {
    return filter_family(lambda, sig, FamilyKind::UserSupplied,
                         [](const Int& w) { return w < 0; });
}

bool support_order_less(const std::vector<ExponentVector>& a,
                        const std::vector<ExponentVector>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        kCanonicalLess);
}

bool is_subset_of_family(const std::vector<ExponentVector>& support,
                         const MonomialFamily& family) {
    std::vector<ExponentVector> sorted = support;
    std::sort(sorted.begin(), sorted.end(), kCanonicalLess);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return std::includes(family.support.begin(), family.support.end(), sorted.begin(),
                         sorted.end(), kCanonicalLess);
}

std::vector<MonomialFamily> maximal_families(const std::vector<MonomialFamily>& families) {
    if (families.empty()) return {};
    const SpaceSignature& sig = families.front().sig;
    for (const auto& f : families)
        if (f.sig != sig) throw validation_error("families of mixed signatures");

    // collapse equal supports, merging origins
    std::map<std::vector<std::vector<int>>, MonomialFamily> merged;
    for (const auto& f : families) {
        std::vector<std::vector<int>> key;
        key.reserve(f.support.size());
        for (const auto& I : f.support) key.push_back(I.exps());
        auto it = merged.find(key);
        if (it == merged.end()) {
            merged.emplace(std::move(key), f);
        } else {
            auto& dst = it->second.lambdas;
            dst.insert(dst.end(), f.lambdas.begin(), f.lambdas.end());
            std::sort(dst.begin(), dst.end());
            dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
        }
    }
    std::vector<MonomialFamily> distinct;
    distinct.reserve(merged.size());
    for (auto& [key, fam] : merged) distinct.push_back(std::move(fam));

    std::vector<MonomialFamily> out;
    for (size_t i = 0; i < distinct.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < distinct.size() && !dominated; ++j) {
            if (i == j) continue;
            if (distinct[j].support.size() > distinct[i].support.size() &&
                is_subset_of_family(distinct[i].support, distinct[j]))
                dominated = true;
        }
        if (!dominated) out.push_back(distinct[i]);
    }
    std::sort(out.begin(), out.end(), [](const MonomialFamily& a, const MonomialFamily& b) {
        return support_order_less(a.support, b.support);
    });
    return out;
}

std::vector<std::vector<int>> factor_symmetries(const SpaceSignature& sig) {
    std::vector<int> perm(static_cast<size_t>(sig.factors()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int t = 0; t < sig.factors() && ok; ++t) {
            size_t u = static_cast<size_t>(perm[static_cast<size_t>(t)]);
            ok = sig.dims()[u] == sig.dims()[static_cast<size_t>(t)] &&
                 sig.degrees()[u] == sig.degrees()[static_cast<size_t>(t)];
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Relabel factors: new block t is the old block perm[t].
ExponentVector relabel(const SpaceSignature& sig, const ExponentVector& I,
                       const std::vector<int>& perm) {
    std::vector<int> exps;
    exps.reserve(I.size());
    for (int t = 0; t < sig.factors(); ++t) {
        int src = perm[static_cast<size_t>(t)];
        for (int i = 0; i < sig.block_size(src); ++i)
            exps.push_back(I[static_cast<size_t>(sig.block_offset(src) + i)]);
    }
    return ExponentVector::checked(sig, std::move(exps));
}

}  // namespace

std::vector<MonomialFamily> factor_swap_dedup(const std::vector<MonomialFamily>& families,
                                              const SpaceSignature& sig) {
    auto perms = factor_symmetries(sig);
    if (perms.size() <= 1) {
        auto out = families;
        std::sort(out.begin(), out.end(), [](const MonomialFamily& a, const MonomialFamily& b) {
            return support_order_less(a.support, b.support);
        });
        return out;
    }
    // orbit key: the canonically least relabeled support
    auto orbit_key = [&](const MonomialFamily& f) {
        std::vector<ExponentVector> best;
        for (const auto& perm : perms) {
            std::vector<ExponentVector> img;
            img.reserve(f.support.size());
            for (const auto& I : f.support) img.push_back(relabel(sig, I, perm));
            std::sort(img.begin(), img.end(), kCanonicalLess);
            if (best.empty() || support_order_less(img, best)) best = std::move(img);
        }
        std::vector<std::vector<int>> key;
        key.reserve(best.size());
        for (const auto& I : best) key.push_back(I.exps());
        return key;
    };
    std::map<std::vector<std::vector<int>>, MonomialFamily> reps;
    for (const auto& f : families) {
        auto key = orbit_key(f);
        auto it = reps.find(key);
        if (it == reps.end() || support_order_less(f.support, it->second.support))
            reps.insert_or_assign(key, f);
    }
    std::vector<MonomialFamily> out;
    out.reserve(reps.size());
    for (auto& [key, fam] : reps) out.push_back(std::move(fam));
    std::sort(out.begin(), out.end(), [](const MonomialFamily& a, const MonomialFamily& b) {
        return support_order_less(a.support, b.support);
    });
    return out;
}

}  // namespace gitstab
