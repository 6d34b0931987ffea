#include "gitstab/polytope.hpp"

#include <algorithm>
#include <set>

#include "gitstab/lattice.hpp"
#include "gitstab/linalg.hpp"
#include "gitstab/lp.hpp"
#include "gitstab/oneps.hpp"

namespace gitstab {

RationalPoint to_rational(const LatticePoint& p) {
    return RationalPoint{{p.coords.begin(), p.coords.end()}};
}

std::vector<RationalPoint> project_support(const SpaceSignature& sig,
                                           const std::vector<ExponentVector>& support) {
    std::vector<RationalPoint> out;
    out.reserve(support.size());
    for (const auto& I : support) out.push_back(to_rational(xi_project(sig, I)));
    return out;
}

int affine_rank(const std::vector<RationalPoint>& points) {
    if (points.empty()) throw validation_error("affine rank of empty point set");
    std::vector<std::vector<Rat>> rows;
    rows.reserve(points.size() - 1);
    for (size_t i = 1; i < points.size(); ++i) {
        if (points[i].coords.size() != points[0].coords.size())
            throw validation_error("points of mixed dimensions");
        std::vector<Rat> row(points[i].coords);
        for (size_t j = 0; j < row.size(); ++j) row[j] -= points[0].coords[j];
        rows.push_back(std::move(row));
    }
    return linalg::rank(std::move(rows));
}

namespace {

void check_dims(const std::vector<RationalPoint>& points, const RationalPoint& q) {
    if (points.empty()) throw validation_error("membership test against empty point set");
    for (const auto& p : points)
        if (p.coords.size() != q.coords.size())
            throw validation_error("points of mixed dimensions");
}

std::vector<RationalPoint> dedup(const std::vector<RationalPoint>& points) {
    std::set<std::vector<Rat>> seen;
    std::vector<RationalPoint> out;
    for (const auto& p : points)
        if (seen.insert(p.coords).second) out.push_back(p);
    return out;
}

// Positive-primitive scaling of (linear, constant), for tidy separators.
// primitive_integer scales by a positive rational, so orientation is kept.
AffineFunctional tidy(AffineFunctional phi) {
    std::vector<Rat> all = phi.linear;
    all.push_back(phi.constant);
    auto ints = linalg::primitive_integer(all);
    AffineFunctional out;
    out.linear.assign(ints.begin(), ints.end() - 1);
    out.constant = ints.back();
    return out;
}

}  // namespace

ContainsResult contains(const std::vector<RationalPoint>& points, const RationalPoint& q) {
    check_dims(points, q);
    const size_t n = points.size();
    const size_t d = q.coords.size();
    std::vector<std::vector<Rat>> A(d + 1, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(d + 1, Rat(0));
    for (size_t k = 0; k < d; ++k) {
        for (size_t i = 0; i < n; ++i) A[k][i] = points[i].coords[k];
        b[k] = q.coords[k];
    }
    for (size_t i = 0; i < n; ++i) A[d][i] = 1;
    b[d] = 1;
    auto sol = lp::solve(A, b, std::vector<Rat>(n, Rat(0)));

    ContainsResult out;
    if (sol.status == lp::Status::Optimal) {
        out.contains = true;
        // exact reconstruction check
        Rat wsum = 0;
        for (size_t i = 0; i < n; ++i) {
            if (sol.x[i] < 0) throw internal_error("negative convex weight");
            wsum += sol.x[i];
        }
        if (wsum != 1) throw internal_error("convex weights do not sum to one");
        for (size_t k = 0; k < d; ++k) {
            Rat acc = 0;
            for (size_t i = 0; i < n; ++i) acc += sol.x[i] * points[i].coords[k];
            if (acc != q.coords[k]) throw internal_error("convex certificate fails to reproduce q");
        }
        out.weights = std::move(sol.x);
        return out;
    }
    if (sol.status != lp::Status::Infeasible) throw internal_error("membership LP unbounded");
    // Farkas (u, t): u.p_i + t <= 0 for all i, u.q + t > 0. The separator
    // value(x) = u.q - u.x is then 0 at q and positive at every point.
    std::vector<Rat> u(sol.farkas.begin(), sol.farkas.begin() + static_cast<long>(d));
    AffineFunctional phi;
    phi.linear.reserve(d);
    Rat uq = 0;
    for (size_t k = 0; k < d; ++k) {
        phi.linear.push_back(-u[k]);
        uq += u[k] * q.coords[k];
    }
    phi.constant = uq;
    phi = tidy(phi);
    if (phi.value(q.coords) != 0) throw internal_error("separator does not vanish at q");
    for (const auto& p : points)
        if (phi.value(p.coords) <= 0) throw internal_error("separator not positive on points");
    out.contains = false;
    out.separator = std::move(phi);
    return out;
}

bool relint_contains(const std::vector<RationalPoint>& points, const RationalPoint& q) {
    check_dims(points, q);
    auto pts = dedup(points);
    const size_t n = pts.size();
    if (n == 1) return pts[0] == q;
    const size_t d = q.coords.size();
    // variables: w_0..w_{n-1}, eps, s_0..s_{n-1}; maximize eps subject to
    // sum w_i p_i = q, sum w_i = 1, w_i - eps - s_i = 0, all vars >= 0.
    const size_t nv = 2 * n + 1;
    std::vector<std::vector<Rat>> A(d + 1 + n, std::vector<Rat>(nv, Rat(0)));
    std::vector<Rat> b(d + 1 + n, Rat(0));
    for (size_t k = 0; k < d; ++k) {
        for (size_t i = 0; i < n; ++i) A[k][i] = pts[i].coords[k];
        b[k] = q.coords[k];
    }
    for (size_t i = 0; i < n; ++i) A[d][i] = 1;
    b[d] = 1;
    for (size_t i = 0; i < n; ++i) {
        A[d + 1 + i][i] = 1;
        A[d + 1 + i][n] = -1;
        A[d + 1 + i][n + 1 + i] = -1;
    }
    std::vector<Rat> cost(nv, Rat(0));
    cost[n] = -1;
    auto sol = lp::solve(A, b, cost);
    if (sol.status == lp::Status::Infeasible) return false;
    if (sol.status != lp::Status::Optimal) throw internal_error("relint LP unbounded");
    return sol.objective < 0;
}

bool interior_contains(const std::vector<RationalPoint>& points, const RationalPoint& q,
                       int dim) {
    return affine_rank(points) == dim && relint_contains(points, q);
}

CentroidVerdict centroid_classify(const SpaceSignature& sig,
                                  const std::vector<ExponentVector>& support) {
    if (support.empty()) throw validation_error("empty support");
    auto pts = project_support(sig, support);
    auto q = centroid(sig);
    auto mem = contains(pts, q);
    CentroidVerdict v;
    v.contains = mem.contains;
    if (!mem.contains) {
        v.separator = std::move(mem.separator);
        return v;
    }
    v.weights = std::move(mem.weights);
    v.interior = interior_contains(pts, q, sig.projected_dim());
    return v;
}

std::vector<std::vector<Int>> functional_to_raw_weights(const SpaceSignature& sig,
                                                        const AffineFunctional& phi) {
    if (static_cast<int>(phi.linear.size()) != sig.projected_dim())
        throw validation_error("functional has wrong dimension for signature");
    RationalPoint O = centroid(sig);
    if (phi.value(O.coords) != 0)
        throw validation_error("functional does not vanish at the centroid");
    std::vector<Int> alpha = linalg::primitive_integer(phi.linear);
    bool all_zero = std::all_of(alpha.begin(), alpha.end(), [](const Int& a) { return a == 0; });
    if (all_zero) throw validation_error("trivial functional yields trivial subgroup");

    Int C = 1;
    for (int m : sig.dims()) C *= m + 1;
    std::vector<std::vector<Int>> weights;
    weights.reserve(static_cast<size_t>(sig.factors()));
    size_t pos = 0;
    for (int t = 0; t < sig.factors(); ++t) {
        int m = sig.dims()[static_cast<size_t>(t)];
        Int At = 0;
        for (int i = 0; i < m; ++i) At += alpha[pos + static_cast<size_t>(i)];
        Int shift = (C / (m + 1)) * At;
        std::vector<Int> block;
        block.reserve(static_cast<size_t>(m) + 1);
        for (int i = 0; i < m; ++i) block.push_back(C * alpha[pos + static_cast<size_t>(i)] - shift);
        block.push_back(-shift);
        weights.push_back(std::move(block));
        pos += static_cast<size_t>(m);
    }

    // The defining identity, checked rather than assumed: <I, weights> is a
    // fixed positive multiple of phi(xi(I)) across the whole monomial set.
    Rat ratio = 0;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (phi.linear[i] != 0) {
            ratio = Rat(alpha[i]) / phi.linear[i];
            break;
        }
    }
    for (const auto& I : enumerate_monomials(sig)) {
        Rat expect = Rat(C) * ratio * phi.value(to_rational(xi_project(sig, I)).coords);
        if (Rat(pairing_raw(I, weights)) != expect)
            throw internal_error("weight construction violates the pairing identity");
    }
    return weights;
}

OneParamSubgroup functional_to_oneps(const SpaceSignature& sig, const AffineFunctional& phi) {
    return normalize_int(sig, functional_to_raw_weights(sig, phi));
}

AffineFunctional oneps_to_functional(const SpaceSignature& sig,
                                     const OneParamSubgroup& lambda) {
    if (static_cast<int>(lambda.blocks().size()) != sig.factors())
        throw validation_error("subgroup has wrong number of blocks");
    AffineFunctional psi;
    psi.linear.reserve(static_cast<size_t>(sig.projected_dim()));
    psi.constant = 0;
    for (int t = 0; t < sig.factors(); ++t) {
        const auto& b = lambda.blocks()[static_cast<size_t>(t)];
        const Int& last = b.back();
        for (size_t i = 0; i + 1 < b.size(); ++i) psi.linear.emplace_back(b[i] - last);
        psi.constant += Rat(Int(sig.degrees()[static_cast<size_t>(t)]) * last);
    }
    return psi;
}

namespace {

Rat cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return (a.coords[0] - o.coords[0]) * (b.coords[1] - o.coords[1]) -
           (a.coords[1] - o.coords[1]) * (b.coords[0] - o.coords[0]);
}

}  // namespace

std::vector<RationalPoint> hull2d(const std::vector<RationalPoint>& points) {
    for (const auto& p : points)
        if (p.coords.size() != 2) throw validation_error("hull2d expects planar points");
    std::set<std::vector<Rat>> uniq;
    for (const auto& p : points) uniq.insert(p.coords);
    std::vector<RationalPoint> pts;
    pts.reserve(uniq.size());
    for (const auto& c : uniq) pts.push_back(RationalPoint{c});
    if (pts.size() <= 2) return pts;
    // monotone chain, strict turns only
    std::vector<RationalPoint> lo;
    for (const auto& p : pts) {
        while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
        lo.push_back(p);
    }
    std::vector<RationalPoint> hi;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi.back(), *it) <= 0) hi.pop_back();
        hi.push_back(*it);
    }
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;  // [min, max] when all points are collinear
}

std::vector<RationalPoint> extreme_points(const std::vector<RationalPoint>& points) {
    auto pts = dedup(points);
    if (pts.size() <= 2) return pts;
    std::vector<RationalPoint> out;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<RationalPoint> others;
        others.reserve(pts.size() - 1);
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!contains(others, pts[i]).contains) out.push_back(pts[i]);
    }
    return out;
}

}  // namespace gitstab
