#include "gitstab/lattice.hpp"

#include <algorithm>

namespace gitstab {

Int monomial_count(const SpaceSignature& sig) {
    Int total = 1;
    for (int t = 0; t < sig.factors(); ++t) {
        // binom(m + k, k) computed exactly
        Int b = 1;
        int m = sig.dims()[static_cast<size_t>(t)];
        int k = sig.degrees()[static_cast<size_t>(t)];
        for (int i = 1; i <= m; ++i) {
            b *= k + i;
            b /= i;
        }
        total *= b;
    }
    return total;
}

namespace {

// Compositions of `total` into `parts` nonnegative entries, descending lex.
void compositions(int parts, int total, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = total; first >= 0; --first) {
        prefix.push_back(first);
        compositions(parts - 1, total - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<ExponentVector> enumerate_monomials(const SpaceSignature& sig) {
    std::vector<std::vector<std::vector<int>>> per_factor;
    per_factor.reserve(static_cast<size_t>(sig.factors()));
    for (int t = 0; t < sig.factors(); ++t) {
        std::vector<std::vector<int>> blocks;
        std::vector<int> prefix;
        compositions(sig.block_size(t), sig.degrees()[static_cast<size_t>(t)], prefix, blocks);
        per_factor.push_back(std::move(blocks));
    }
    std::vector<ExponentVector> out;
    std::vector<size_t> idx(per_factor.size(), 0);
    // Odometer over per-factor blocks; each factor list is already descending,
    // so the concatenation comes out in descending lex order.
    while (true) {
        std::vector<int> exps;
        exps.reserve(static_cast<size_t>(sig.ambient_dim()));
        for (size_t t = 0; t < per_factor.size(); ++t) {
            const auto& b = per_factor[t][idx[t]];
            exps.insert(exps.end(), b.begin(), b.end());
        }
        out.push_back(ExponentVector(std::move(exps)));
        size_t t = per_factor.size();
        while (t > 0) {
            --t;
            if (++idx[t] < per_factor[t].size()) break;
            idx[t] = 0;
            if (t == 0) return out;
        }
    }
}

Int pairing(const ExponentVector& I, const OneParamSubgroup& lambda) {
    return pairing_raw(I, lambda.blocks());
}

Int pairing_raw(const ExponentVector& I, const std::vector<std::vector<Int>>& weights) {
    size_t n = 0;
    for (const auto& b : weights) n += b.size();
    if (n != I.size()) throw validation_error("pairing of mismatched shapes");
    Int acc = 0;
    size_t pos = 0;
    for (const auto& b : weights)
        for (const auto& w : b) acc += w * I[pos++];
    return acc;
}

Int mu(const std::vector<ExponentVector>& support, const OneParamSubgroup& lambda) {
    return mu_raw(support, lambda.blocks());
}

Int mu_raw(const std::vector<ExponentVector>& support,
           const std::vector<std::vector<Int>>& weights) {
    if (support.empty()) throw validation_error("mu of empty support");
    Int best = pairing_raw(support.front(), weights);
    for (size_t i = 1; i < support.size(); ++i)
        best = std::min(best, pairing_raw(support[i], weights));
    return best;
}

LatticePoint xi_project(const SpaceSignature& sig, const ExponentVector& I) {
    if (static_cast<int>(I.size()) != sig.ambient_dim())
        throw validation_error("xi projection of mismatched shapes");
    std::vector<int> coords;
    coords.reserve(static_cast<size_t>(sig.projected_dim()));
    for (int t = 0; t < sig.factors(); ++t)
        for (int i = 0; i < sig.block_size(t) - 1; ++i)
            coords.push_back(I[static_cast<size_t>(sig.block_offset(t) + i)]);
    return LatticePoint{std::move(coords)};
}

RationalPoint centroid(const SpaceSignature& sig) {
    std::vector<Rat> coords;
    coords.reserve(static_cast<size_t>(sig.projected_dim()));
    for (int t = 0; t < sig.factors(); ++t) {
        Rat c(sig.degrees()[static_cast<size_t>(t)], sig.dims()[static_cast<size_t>(t)] + 1);
        for (int i = 0; i < sig.dims()[static_cast<size_t>(t)]; ++i) coords.push_back(c);
    }
    return RationalPoint{std::move(coords)};
}

}  // namespace gitstab
