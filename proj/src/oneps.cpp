#include "gitstab/oneps.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "gitstab/lattice.hpp"
#include "gitstab/linalg.hpp"

namespace gitstab {

OneParamSubgroup normalize(const SpaceSignature& sig,
                           const std::vector<std::vector<Rat>>& raw) {
    if (static_cast<int>(raw.size()) != sig.factors())
        throw validation_error("weight vector has wrong number of blocks");
    bool nontrivial = false;
    std::vector<std::vector<Rat>> sorted = raw;
    Int den = 1;
    for (int t = 0; t < sig.factors(); ++t) {
        auto& b = sorted[static_cast<size_t>(t)];
        if (static_cast<int>(b.size()) != sig.block_size(t))
            throw validation_error("weight block has wrong length");
        Rat sum = 0;
        for (const auto& x : b) {
            sum += x;
            if (x != 0) nontrivial = true;
            den = int_lcm(den, rat_den(x));
        }
        if (sum != 0) throw validation_error("weight block does not sum to zero");
        std::sort(b.begin(), b.end(), std::greater<Rat>());
    }
    if (!nontrivial) throw validation_error("trivial one-parameter subgroup");
    std::vector<std::vector<Int>> blocks;
    blocks.reserve(sorted.size());
    for (const auto& b : sorted) {
        std::vector<Int> ib;
        ib.reserve(b.size());
        for (const auto& x : b) ib.push_back(rat_num(x) * (den / rat_den(x)));
        blocks.push_back(std::move(ib));
    }
    Int g = content(blocks);
    if (g > 1)
        for (auto& b : blocks)
            for (auto& x : b) x /= g;
    return OneParamSubgroup::checked(sig, std::move(blocks));
}

OneParamSubgroup normalize_int(const SpaceSignature& sig,
                               const std::vector<std::vector<Int>>& raw) {
    std::vector<std::vector<Rat>> rr;
    rr.reserve(raw.size());
    for (const auto& b : raw) rr.emplace_back(b.begin(), b.end());
    return normalize(sig, rr);
}

namespace {

// Primitive representative with canonical sign (first nonzero entry > 0);
// nullopt for the zero vector.
std::optional<std::vector<int>> canonical_direction(std::vector<int> v) {
    long long g = 0;
    for (int x : v) g = static_cast<long long>(std::gcd(g, static_cast<long long>(std::abs(x))));
    if (g == 0) return std::nullopt;
    int lead = 0;
    for (int x : v)
        if (x != 0) { lead = x; break; }
    for (auto& x : v) {
        x = static_cast<int>(x / g);
        if (lead < 0) x = -x;
    }
    return v;
}

}  // namespace

std::vector<HyperplaneNormal> hyperplane_normals(const SpaceSignature& sig) {
    const auto mons = enumerate_monomials(sig);
    std::set<std::vector<int>> seen;
    std::vector<int> diff(static_cast<size_t>(sig.ambient_dim()));
    for (size_t a = 0; a < mons.size(); ++a) {
        for (size_t b = a + 1; b < mons.size(); ++b) {
            for (size_t i = 0; i < diff.size(); ++i) diff[i] = mons[a][i] - mons[b][i];
            if (auto canon = canonical_direction(diff)) seen.insert(std::move(*canon));
        }
    }
    std::vector<HyperplaneNormal> out;
    out.reserve(seen.size());
    for (auto& v : seen) out.push_back(HyperplaneNormal{v});
    return out;
}

namespace {

// A wall as a functional on the reduced weight coordinates (first m_t weights
// of each block; the last weight of a block is minus the block sum).
std::vector<int> reduce_normal(const SpaceSignature& sig, const HyperplaneNormal& n) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(sig.projected_dim()));
    for (int t = 0; t < sig.factors(); ++t) {
        int last = n.coeffs[static_cast<size_t>(sig.block_offset(t) + sig.block_size(t) - 1)];
        for (int i = 0; i < sig.block_size(t) - 1; ++i)
            out.push_back(n.coeffs[static_cast<size_t>(sig.block_offset(t) + i)] - last);
    }
    return out;
}

std::vector<std::vector<Int>> lift_reduced(const SpaceSignature& sig,
                                           const std::vector<Int>& v) {
    std::vector<std::vector<Int>> blocks;
    blocks.reserve(static_cast<size_t>(sig.factors()));
    size_t pos = 0;
    for (int t = 0; t < sig.factors(); ++t) {
        std::vector<Int> b;
        b.reserve(static_cast<size_t>(sig.block_size(t)));
        Int sum = 0;
        for (int i = 0; i < sig.block_size(t) - 1; ++i) {
            b.push_back(v[pos]);
            sum += v[pos];
            ++pos;
        }
        b.push_back(-sum);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

bool non_increasing(const std::vector<std::vector<Int>>& blocks) {
    for (const auto& b : blocks)
        for (size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i] < b[i + 1]) return false;
    return true;
}

}  // namespace

std::vector<OneParamSubgroup> fundamental_set(const SpaceSignature& sig) {
    const int d = sig.projected_dim();
    std::set<std::vector<int>> reduced_set;
    for (const auto& n : hyperplane_normals(sig))
        if (auto canon = canonical_direction(reduce_normal(sig, n)))
            reduced_set.insert(std::move(*canon));
    std::vector<std::vector<Rat>> walls;
    walls.reserve(reduced_set.size());
    for (const auto& w : reduced_set) walls.emplace_back(w.begin(), w.end());

    std::set<std::vector<std::vector<Int>>> found;
    auto emit = [&](const std::vector<Int>& dir) {
        for (int sign : {+1, -1}) {
            std::vector<Int> v = dir;
            if (sign < 0)
                for (auto& x : v) x = -x;
            auto blocks = lift_reduced(sig, v);
            if (!non_increasing(blocks)) continue;
            Int g = content(blocks);
            if (g == 0) continue;
            if (g > 1)
                for (auto& b : blocks)
                    for (auto& x : b) x /= g;
            found.insert(std::move(blocks));
        }
    };

    // DFS over rank-increasing wall chains; a chain of reduced rank d-1 cuts
    // the weight space to a line whose normalised generator is a member.
    // Spans are memoized so equivalent systems are solved once.
    std::unordered_set<std::string> memo;
    std::function<void(const linalg::Echelon&, size_t)> dfs =
        [&](const linalg::Echelon& e, size_t start) {
            if (e.rank() == d - 1) {
                if (auto dir = e.kernel_direction()) emit(*dir);
                return;
            }
            for (size_t i = start; i < walls.size(); ++i) {
                linalg::Echelon next = e;
                if (!next.add(walls[i])) continue;
                if (memo.insert(next.signature() + "#" + std::to_string(i)).second)
                    dfs(next, i + 1);
            }
        };
    dfs(linalg::Echelon(d), 0);

    std::vector<OneParamSubgroup> out;
    out.reserve(found.size());
    for (const auto& blocks : found) out.push_back(OneParamSubgroup::checked(sig, blocks));
    return out;
}

}  // namespace gitstab
