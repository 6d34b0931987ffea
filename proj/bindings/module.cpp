#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gitstab/lattice.hpp"
#include "gitstab/polytope.hpp"
#include "gitstab/oneps.hpp"
#include "gitstab/pipeline.hpp"
#include "gitstab/serialize.hpp"
#include "gitstab/svg.hpp"

namespace py = pybind11;
using namespace gitstab;

namespace {

SpaceSignature sig_of(const std::vector<int>& dims, const std::vector<int>& degrees) {
    return SpaceSignature(dims, degrees);
}

OneParamSubgroup lambda_of(const SpaceSignature& sig, const std::vector<long long>& flat) {
    if (static_cast<int>(flat.size()) != sig.ambient_dim())
        throw validation_error("weight vector has wrong length for signature");
    std::vector<std::vector<Int>> blocks;
    size_t pos = 0;
    for (int t = 0; t < sig.factors(); ++t) {
        std::vector<Int> b;
        for (int i = 0; i < sig.block_size(t); ++i) b.emplace_back(flat[pos++]);
        blocks.push_back(std::move(b));
    }
    return OneParamSubgroup::checked(sig, std::move(blocks));
}

std::vector<ExponentVector> support_of(const SpaceSignature& sig,
                                       const std::vector<std::vector<int>>& exps) {
    std::vector<ExponentVector> out;
    out.reserve(exps.size());
    for (const auto& e : exps) out.push_back(ExponentVector::checked(sig, e));
    return out;
}

std::vector<long long> flat_of(const OneParamSubgroup& l) {
    std::vector<long long> out;
    for (const auto& w : l.flat()) out.push_back(static_cast<long long>(w));
    return out;
}

std::vector<std::vector<int>> exps_of(const std::vector<ExponentVector>& mons) {
    std::vector<std::vector<int>> out;
    out.reserve(mons.size());
    for (const auto& I : mons) out.push_back(I.exps());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact GIT stability of multidegree divisors in products of projective spaces";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    m.def(
        "monomials",
        [](const std::vector<int>& dims, const std::vector<int>& degrees) {
            return exps_of(enumerate_monomials(sig_of(dims, degrees)));
        },
        py::arg("dims"), py::arg("degrees"),
        "All exponent vectors of the multidegree, canonically ordered.");

    m.def(
        "pairing",
        [](const std::vector<int>& dims, const std::vector<int>& degrees,
           const std::vector<int>& exps, const std::vector<long long>& weights) {
            auto sig = sig_of(dims, degrees);
            return static_cast<long long>(
                pairing(ExponentVector::checked(sig, exps), lambda_of(sig, weights)));
        },
        py::arg("dims"), py::arg("degrees"), py::arg("monomial"), py::arg("weights"));

    m.def(
        "mu",
        [](const std::vector<int>& dims, const std::vector<int>& degrees,
           const std::vector<std::vector<int>>& support, const std::vector<long long>& weights) {
            auto sig = sig_of(dims, degrees);
            return static_cast<long long>(
                mu(support_of(sig, support), lambda_of(sig, weights)));
        },
        py::arg("dims"), py::arg("degrees"), py::arg("support"), py::arg("weights"));

    m.def(
        "mu_raw",
        [](const std::vector<int>& dims, const std::vector<int>& degrees,
           const std::vector<std::vector<int>>& support, const std::vector<long long>& weights) {
            auto sig = sig_of(dims, degrees);
            if (static_cast<int>(weights.size()) != sig.ambient_dim())
                throw validation_error("weight vector has wrong length for signature");
            std::vector<std::vector<Int>> blocks;
            size_t pos = 0;
            for (int t = 0; t < sig.factors(); ++t) {
                std::vector<Int> b;
                for (int i = 0; i < sig.block_size(t); ++i) b.emplace_back(weights[pos++]);
                blocks.push_back(std::move(b));
            }
            return static_cast<long long>(mu_raw(support_of(sig, support), blocks));
        },
        py::arg("dims"), py::arg("degrees"), py::arg("support"), py::arg("weights"),
        "Minimum weight against raw (possibly unsorted, non-primitive) weights.");

    m.def(
        "centroid",
        [](const std::vector<int>& dims, const std::vector<int>& degrees) {
            std::vector<std::string> out;
            for (const auto& c : centroid(sig_of(dims, degrees)).coords)
                out.push_back(rat_to_string(c));
            return out;
        },
        py::arg("dims"), py::arg("degrees"), "Centroid coordinates as exact 'p/q' strings.");

    m.def(
        "normalize",
        [](const std::vector<int>& dims, const std::vector<int>& degrees,
           const std::vector<std::vector<long long>>& blocks) {
            std::vector<std::vector<Int>> raw;
            for (const auto& b : blocks) raw.emplace_back(b.begin(), b.end());
            return flat_of(normalize_int(sig_of(dims, degrees), raw));
        },
        py::arg("dims"), py::arg("degrees"), py::arg("blocks"));

    m.def(
        "fundamental_set",
        [](const std::vector<int>& dims, const std::vector<int>& degrees) {
            std::vector<std::vector<long long>> out;
            for (const auto& l : fundamental_set(sig_of(dims, degrees))) out.push_back(flat_of(l));
            return out;
        },
        py::arg("dims"), py::arg("degrees"));

    auto family_fn = [](MonomialFamily (*fn)(const OneParamSubgroup&, const SpaceSignature&)) {
        return [fn](const std::vector<int>& dims, const std::vector<int>& degrees,
                    const std::vector<long long>& weights) {
            auto sig = sig_of(dims, degrees);
            return exps_of(fn(lambda_of(sig, weights), sig).support);
        };
    };
    m.def("n_plus", family_fn(&n_plus), py::arg("dims"), py::arg("degrees"), py::arg("weights"));
    m.def("n_oplus", family_fn(&n_oplus), py::arg("dims"), py::arg("degrees"), py::arg("weights"));
    m.def("ann", family_fn(&ann), py::arg("dims"), py::arg("degrees"), py::arg("weights"));

    m.def(
        "centroid_verdict",
        [](const std::vector<int>& dims, const std::vector<int>& degrees,
           const std::vector<std::vector<int>>& support) {
            auto sig = sig_of(dims, degrees);
            auto v = centroid_classify(sig, support_of(sig, support));
            py::dict out;
            out["contains"] = v.contains;
            out["interior"] = v.interior;
            out["classification"] = verdict_name(v);
            return out;
        },
        py::arg("dims"), py::arg("degrees"), py::arg("support"));

    m.def(
        "destabilizing_subgroup",
        [](const std::vector<int>& dims, const std::vector<int>& degrees,
           const std::vector<std::vector<int>>& support) -> py::object {
            auto sig = sig_of(dims, degrees);
            auto s = support_of(sig, support);
            auto mem = contains(project_support(sig, s), centroid(sig));
            if (mem.contains) return py::none();
            // the separator's raw weights make every support weight positive;
            // return them next to the normalised representative
            auto raw = functional_to_raw_weights(sig, *mem.separator);
            py::dict out;
            std::vector<long long> flat_raw;
            for (const auto& b : raw)
                for (const auto& w : b) flat_raw.push_back(static_cast<long long>(w));
            out["raw_weights"] = flat_raw;
            out["normalized"] = flat_of(normalize_int(sig, raw));
            out["mu"] = static_cast<long long>(mu_raw(s, raw));
            return out;
        },
        py::arg("dims"), py::arg("degrees"), py::arg("support"),
        "Destabilizing weights for an unstable support, or None when semistable.");

    m.def(
        "classify_json",
        [](const std::vector<int>& dims, const std::vector<int>& degrees, bool dedup_symmetry,
           bool parallel) {
            ClassifyOptions opt{dedup_symmetry, parallel};
            return report_to_json(classify(sig_of(dims, degrees), opt));
        },
        py::arg("dims"), py::arg("degrees"), py::arg("dedup_symmetry") = true,
        py::arg("parallel") = true, "Full classification report as canonical json.");

    m.def(
        "check_support_json",
        [](const std::vector<int>& dims, const std::vector<int>& degrees,
           const std::vector<std::vector<int>>& support) {
            auto sig = sig_of(dims, degrees);
            return check_to_json(check_support(sig, support_of(sig, support)));
        },
        py::arg("dims"), py::arg("degrees"), py::arg("support"));

    m.def(
        "plot_svg",
        [](const std::vector<int>& dims, const std::vector<int>& degrees,
           const std::vector<std::vector<int>>& support) {
            auto sig = sig_of(dims, degrees);
            return render_plot(sig, support_of(sig, support));
        },
        py::arg("dims"), py::arg("degrees"), py::arg("support"));
}
