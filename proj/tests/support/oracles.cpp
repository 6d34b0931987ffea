#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracles {

namespace {

Rat cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return (a.coords[0] - o.coords[0]) * (b.coords[1] - o.coords[1]) -
           (a.coords[1] - o.coords[1]) * (b.coords[0] - o.coords[0]);
}

bool on_segment(const RationalPoint& a, const RationalPoint& b, const RationalPoint& q) {
    if (cross(a, b, q) != 0) return false;
    for (int c = 0; c < 2; ++c) {
        Rat lo = std::min(a.coords[c], b.coords[c]);
        Rat hi = std::max(a.coords[c], b.coords[c]);
        if (q.coords[c] < lo || q.coords[c] > hi) return false;
    }
    return true;
}

}  // namespace

std::vector<RationalPoint> hull_giftwrap(const std::vector<RationalPoint>& points) {
    std::set<std::vector<Rat>> uniq;
    for (const auto& p : points) uniq.insert(p.coords);
    std::vector<RationalPoint> pts;
    for (const auto& c : uniq) pts.push_back(RationalPoint{c});
    if (pts.size() <= 1) return pts;

    size_t start = 0;  // std::set order: lexicographically least first
    std::vector<RationalPoint> hull;
    size_t cur = start;
    do {
        hull.push_back(pts[cur]);
        size_t cand = (cur + 1) % pts.size();
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i == cur) continue;
            Rat c = cross(pts[cur], pts[cand], pts[i]);
            // pick the most clockwise candidate; on ties keep the farther one
            if (c < 0 || (c == 0 && on_segment(pts[cur], pts[i], pts[cand])))
                cand = i;
        }
        cur = cand;
        if (hull.size() > pts.size() + 1) break;  // collinear degenerate guard
    } while (cur != start);

    if (hull.size() > 2) return hull;
    // collinear set: endpoints only
    std::vector<RationalPoint> seg{pts.front(), pts.back()};
    return seg;
}

Where locate(const std::vector<RationalPoint>& points, const RationalPoint& q) {
    auto hull = hull_giftwrap(points);
    if (hull.size() == 1) return hull[0] == q ? Where::Boundary : Where::Outside;
    if (hull.size() == 2)
        return on_segment(hull[0], hull[1], q) ? Where::Boundary : Where::Outside;
    bool boundary = false;
    for (size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        Rat c = cross(a, b, q);
        if (c < 0) return Where::Outside;
        if (c == 0) {
            if (!on_segment(a, b, q)) return Where::Outside;
            boundary = true;
        }
    }
    return boundary ? Where::Boundary : Where::Inside;
}

std::vector<std::vector<long long>> fundamental_p1xp1(int k, int l) {
    std::vector<std::vector<long long>> out;
    for (int a = 0; a <= l; ++a)
        for (int b = 0; b <= k; ++b) {
            if (a == 0 && b == 0) continue;
            if (std::gcd(a, b) != 1) continue;
            out.push_back({a, -a, b, -b});
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracles
