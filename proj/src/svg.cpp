#include "gitstab/svg.hpp"

#include <sstream>

#include "gitstab/lattice.hpp"
#include "gitstab/polytope.hpp"

namespace gitstab {

std::string rat_to_decimal(const Rat& r) {
    const Int scale = 1000000;
    Int num = rat_num(r) * scale * 2;
    Int den = rat_den(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scaled = (num + den) / (den * 2);  // round half away from zero
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::string out = whole.str();
    if (frac != 0) {
        std::string f = frac.str();
        f.insert(f.begin(), 6 - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    if (neg && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
    return out;
}

namespace {

struct Mapper {
    Rat ymax;
    std::string x(const Rat& v) const { return rat_to_decimal(v); }
    std::string y(const Rat& v) const { return rat_to_decimal(ymax - v); }
};

}  // namespace

std::string render_plot(const SpaceSignature& sig,
                        const std::vector<ExponentVector>& support) {
    if (sig.projected_dim() != 2)
        throw validation_error(
            "plotting needs projected dimension 2; for higher dimensions use the json "
            "output of `check`, whose hull_vertices field carries the exact hull data");
    if (support.empty()) throw validation_error("empty support");

    // coordinate j of the projected lattice ranges over [0, degree of its factor]
    std::vector<int> bounds;
    for (int t = 0; t < sig.factors(); ++t)
        for (int i = 0; i < sig.dims()[static_cast<size_t>(t)]; ++i)
            bounds.push_back(sig.degrees()[static_cast<size_t>(t)]);

    auto pts = project_support(sig, support);
    auto hull = hull2d(pts);
    auto O = centroid(sig);
    Mapper map{Rat(bounds[1])};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 " << bounds[0] + 2 << " "
       << bounds[1] + 2 << "\">\n";
    // faint full-lattice grid for orientation
    for (int gx = 0; gx <= bounds[0]; ++gx)
        for (int gy = 0; gy <= bounds[1]; ++gy)
            os << "  <circle cx=\"" << gx << "\" cy=\"" << bounds[1] - gy
               << "\" r=\"0.04\" fill=\"#bbbbbb\"/>\n";
    if (hull.size() >= 2) {
        os << (hull.size() == 2 ? "  <polyline points=\"" : "  <polygon points=\"");
        for (size_t i = 0; i < hull.size(); ++i) {
            if (i) os << " ";
            os << map.x(hull[i].coords[0]) << "," << map.y(hull[i].coords[1]);
        }
        os << "\" fill=\"none\" stroke=\"#2060a0\" stroke-width=\"0.05\"/>\n";
    }
    for (const auto& p : pts)
        os << "  <circle cx=\"" << map.x(p.coords[0]) << "\" cy=\"" << map.y(p.coords[1])
           << "\" r=\"0.11\" fill=\"black\"/>\n";
    os << "  <circle cx=\"" << map.x(O.coords[0]) << "\" cy=\"" << map.y(O.coords[1])
       << "\" r=\"0.14\" fill=\"red\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace gitstab
