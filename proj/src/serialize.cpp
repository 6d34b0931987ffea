#include "gitstab/serialize.hpp"

#include <json.hpp>
#include <sstream>

#include "gitstab/lattice.hpp"

namespace gitstab {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json int_to_json(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw internal_error("integer exceeds serialized range");
    return static_cast<std::int64_t>(v);
}

json subgroup_to_json(const OneParamSubgroup& lambda) {
    json out = json::array();
    for (const auto& w : lambda.flat()) out.push_back(int_to_json(w));
    return out;
}

OneParamSubgroup subgroup_from_json(const SpaceSignature& sig, const json& j) {
    std::vector<std::vector<Int>> blocks;
    blocks.reserve(static_cast<size_t>(sig.factors()));
    size_t pos = 0;
    if (static_cast<int>(j.size()) != sig.ambient_dim())
        throw validation_error("weight vector has wrong length");
    for (int t = 0; t < sig.factors(); ++t) {
        std::vector<Int> b;
        for (int i = 0; i < sig.block_size(t); ++i)
            b.emplace_back(j.at(pos++).get<std::int64_t>());
        blocks.push_back(std::move(b));
    }
    return OneParamSubgroup::checked(sig, std::move(blocks));
}

json monomials_to_json(const std::vector<ExponentVector>& mons) {
    json out = json::array();
    for (const auto& I : mons) out.push_back(I.exps());
    return out;
}

std::vector<ExponentVector> monomials_from_json(const SpaceSignature& sig, const json& j) {
    std::vector<ExponentVector> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(ExponentVector::checked(sig, e.get<std::vector<int>>()));
    return out;
}

json signature_to_json(const SpaceSignature& sig) {
    return json{{"dims", sig.dims()}, {"degrees", sig.degrees()}};
}

SpaceSignature signature_from_json(const json& j) {
    return SpaceSignature(j.at("dims").get<std::vector<int>>(),
                          j.at("degrees").get<std::vector<int>>());
}

json rats_to_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rat_to_string(r));
    return out;
}

std::vector<Rat> rats_from_json(const json& j) {
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& s : j) out.push_back(rat_from_string(s.get<std::string>()));
    return out;
}

json verdict_to_json(const CentroidVerdict& v) {
    json out{{"contains", v.contains}, {"interior", v.interior}};
    if (v.weights) out["certificate"] = rats_to_json(*v.weights);
    if (v.separator) {
        out["separator"] = json{{"linear", rats_to_json(v.separator->linear)},
                                {"constant", rat_to_string(v.separator->constant)}};
    }
    return out;
}

CentroidVerdict verdict_from_json(const json& j) {
    CentroidVerdict v;
    v.contains = j.at("contains").get<bool>();
    v.interior = j.at("interior").get<bool>();
    if (j.contains("certificate")) v.weights = rats_from_json(j.at("certificate"));
    if (j.contains("separator")) {
        AffineFunctional phi;
        phi.linear = rats_from_json(j.at("separator").at("linear"));
        phi.constant = rat_from_string(j.at("separator").at("constant").get<std::string>());
        v.separator = std::move(phi);
    }
    return v;
}

json lambdas_to_json(const std::vector<OneParamSubgroup>& ls) {
    json out = json::array();
    for (const auto& l : ls) out.push_back(subgroup_to_json(l));
    return out;
}

json report_to_json_obj(const StabilityReport& r) {
    json semis = json::array();
    for (size_t i = 0; i < r.semistable.size(); ++i) {
        const auto& e = r.semistable[i];
        semis.push_back(json{{"id", i},
                             {"lambdas", lambdas_to_json(e.family.lambdas)},
                             {"monomials", monomials_to_json(e.family.support)},
                             {"verdict", verdict_to_json(e.verdict)}});
    }
    json unst = json::array();
    for (size_t i = 0; i < r.unstable.size(); ++i) {
        const auto& e = r.unstable[i];
        unst.push_back(json{{"id", i},
                            {"lambdas", lambdas_to_json(e.family.lambdas)},
                            {"monomials", monomials_to_json(e.family.support)}});
    }
    json anns = json::array();
    for (size_t i = 0; i < r.semistable.size(); ++i) {
        const auto& e = r.semistable[i];
        if (!e.annihilator) continue;
        anns.push_back(json{{"family", i},
                            {"lambda", subgroup_to_json(e.family.lambdas.front())},
                            {"monomials", monomials_to_json(e.annihilator->support)}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"signature", signature_to_json(r.sig)},
                {"fundamental",
                 json{{"count", r.fundamental.size()}, {"subgroups", lambdas_to_json(r.fundamental)}}},
                {"semistable_families", semis},
                {"unstable_families", unst},
                {"annihilators", anns},
                {"dedup", json{{"symmetry", r.symmetry_deduped},
                               {"pre_dedup_semistable", r.pre_dedup_semistable},
                               {"pre_dedup_unstable", r.pre_dedup_unstable}}}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw validation_error(std::string("malformed json: ") + e.what());
    }
}

}  // namespace

std::string report_to_json(const StabilityReport& report) {
    return dump(report_to_json_obj(report));
}

StabilityReport report_from_json(const std::string& text) {
    json j = parse_json(text);
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion)
            throw validation_error("unsupported report schema version");
        SpaceSignature sig = signature_from_json(j.at("signature"));
        StabilityReport r{sig, {}, {}, {}, false, 0, 0};
        for (const auto& l : j.at("fundamental").at("subgroups"))
            r.fundamental.push_back(subgroup_from_json(sig, l));
        if (j.at("fundamental").at("count").get<size_t>() != r.fundamental.size())
            throw validation_error("fundamental count disagrees with the listed subgroups");
        for (const auto& e : j.at("semistable_families")) {
            std::vector<OneParamSubgroup> ls;
            for (const auto& l : e.at("lambdas")) ls.push_back(subgroup_from_json(sig, l));
            auto fam = make_family(sig, FamilyKind::NOplus, std::move(ls),
                                   monomials_from_json(sig, e.at("monomials")));
            r.semistable.push_back(
                SemistableEntry{std::move(fam), verdict_from_json(e.at("verdict")), std::nullopt});
        }
        for (const auto& a : j.at("annihilators")) {
            size_t fi = a.at("family").get<size_t>();
            if (fi >= r.semistable.size()) throw validation_error("annihilator family out of range");
            r.semistable[fi].annihilator =
                make_family(sig, FamilyKind::Ann, {subgroup_from_json(sig, a.at("lambda"))},
                            monomials_from_json(sig, a.at("monomials")));
        }
        for (const auto& e : j.at("unstable_families")) {
            std::vector<OneParamSubgroup> ls;
            for (const auto& l : e.at("lambdas")) ls.push_back(subgroup_from_json(sig, l));
            r.unstable.push_back(DestabEntry{make_family(
                sig, FamilyKind::NPlus, std::move(ls), monomials_from_json(sig, e.at("monomials")))});
        }
        r.symmetry_deduped = j.at("dedup").at("symmetry").get<bool>();
        r.pre_dedup_semistable = j.at("dedup").at("pre_dedup_semistable").get<int>();
        r.pre_dedup_unstable = j.at("dedup").at("pre_dedup_unstable").get<int>();
        return r;
    } catch (const json::exception& e) {
        throw validation_error(std::string("report document: ") + e.what());
    }
}

std::string rat_pretty(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

namespace {

void print_family(std::ostringstream& os, const SpaceSignature& sig, const std::string& label,
                  const MonomialFamily& fam) {
    os << label << "  [" << fam.support.size() << " monomials]";
    if (!fam.lambdas.empty()) {
        os << "  lambda:";
        for (const auto& l : fam.lambdas) os << " " << l.to_string();
    }
    os << "\n  ";
    for (size_t i = 0; i < fam.support.size(); ++i) {
        if (i) os << " ";
        os << fam.support[i].to_string(sig);
    }
    os << "\n";
}

}  // namespace

std::string report_to_text(const StabilityReport& r) {
    std::ostringstream os;
    os << "signature: " << r.sig.to_string() << "\n";
    os << "fundamental set: " << r.fundamental.size() << " one-parameter subgroups\n";
    os << "maximal semi-destabilised families: " << r.semistable.size();
    if (r.symmetry_deduped)
        os << " (from " << r.pre_dedup_semistable << " before factor symmetry dedup)";
    os << "\n";
    for (size_t i = 0; i < r.semistable.size(); ++i) {
        const auto& e = r.semistable[i];
        print_family(os, r.sig, "[S" + std::to_string(i) + "] " + verdict_name(e.verdict),
                     e.family);
        if (e.annihilator) {
            os << "  annihilator [" << e.annihilator->support.size() << " monomials]: ";
            for (size_t k = 0; k < e.annihilator->support.size(); ++k) {
                if (k) os << " ";
                os << e.annihilator->support[k].to_string(r.sig);
            }
            os << "\n";
        }
    }
    os << "maximal destabilised families: " << r.unstable.size();
    if (r.symmetry_deduped)
        os << " (from " << r.pre_dedup_unstable << " before factor symmetry dedup)";
    os << "\n";
    for (size_t i = 0; i < r.unstable.size(); ++i)
        print_family(os, r.sig, "[U" + std::to_string(i) + "] unstable", r.unstable[i].family);
    return os.str();
}

namespace {

std::string flat_ints(const std::vector<Int>& v, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i].str();
    }
    return os.str();
}

std::string flat_exps(const ExponentVector& I, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < I.size(); ++i) {
        if (i) os << sep;
        os << I[i];
    }
    return os.str();
}

}  // namespace

std::string report_to_csv(const StabilityReport& r) {
    std::ostringstream os;
    os << "kind,family,lambda,monomial\n";
    for (size_t i = 0; i < r.semistable.size(); ++i) {
        const auto& e = r.semistable[i];
        std::string lam = flat_ints(e.family.lambdas.front().flat(), ' ');
        for (const auto& I : e.family.support)
            os << "semistable," << i << "," << lam << "," << flat_exps(I, ' ') << "\n";
        if (e.annihilator)
            for (const auto& I : e.annihilator->support)
                os << "annihilator," << i << "," << lam << "," << flat_exps(I, ' ') << "\n";
    }
    for (size_t i = 0; i < r.unstable.size(); ++i) {
        const auto& e = r.unstable[i];
        std::string lam = flat_ints(e.family.lambdas.front().flat(), ' ');
        for (const auto& I : e.family.support)
            os << "unstable," << i << "," << lam << "," << flat_exps(I, ' ') << "\n";
    }
    return os.str();
}

std::string fundamental_to_json(const std::vector<OneParamSubgroup>& fund) {
    return dump(lambdas_to_json(fund));
}

std::string fundamental_to_text(const SpaceSignature& sig,
                                const std::vector<OneParamSubgroup>& fund) {
    std::ostringstream os;
    os << "fundamental set for " << sig.to_string() << ": " << fund.size()
       << " one-parameter subgroups\n";
    for (const auto& l : fund) os << l.to_string() << "\n";
    return os.str();
}

std::string fundamental_to_csv(const std::vector<OneParamSubgroup>& fund) {
    std::ostringstream os;
    for (const auto& l : fund) os << flat_ints(l.flat(), ',') << "\n";
    return os.str();
}

namespace {

json families_json_obj(const StabilityReport& r) {
    json full = report_to_json_obj(r);
    return json{{"schema_version", kSchemaVersion},
                {"signature", full.at("signature")},
                {"semistable_families", full.at("semistable_families")},
                {"unstable_families", full.at("unstable_families")},
                {"dedup", full.at("dedup")}};
}

}  // namespace

std::string families_to_json(const StabilityReport& r) { return dump(families_json_obj(r)); }

std::string families_to_text(const StabilityReport& r) { return report_to_text(r); }

std::string families_to_csv(const StabilityReport& r) { return report_to_csv(r); }

std::string annihilators_to_json(const StabilityReport& r) {
    json full = report_to_json_obj(r);
    return dump(json{{"schema_version", kSchemaVersion},
                     {"signature", full.at("signature")},
                     {"annihilators", full.at("annihilators")}});
}

std::string annihilators_to_text(const StabilityReport& r) {
    std::ostringstream os;
    os << "signature: " << r.sig.to_string() << "\n";
    for (size_t i = 0; i < r.semistable.size(); ++i) {
        const auto& e = r.semistable[i];
        if (!e.annihilator) continue;
        print_family(os, r.sig, "[A" + std::to_string(i) + "]", *e.annihilator);
    }
    return os.str();
}

std::string annihilators_to_csv(const StabilityReport& r) {
    std::ostringstream os;
    os << "family,lambda,monomial\n";
    for (size_t i = 0; i < r.semistable.size(); ++i) {
        const auto& e = r.semistable[i];
        if (!e.annihilator) continue;
        std::string lam = flat_ints(e.family.lambdas.front().flat(), ' ');
        for (const auto& I : e.annihilator->support)
            os << i << "," << lam << "," << flat_exps(I, ' ') << "\n";
    }
    return os.str();
}

std::string centroid_to_json(const SpaceSignature& sig) {
    return dump(rats_to_json(centroid(sig).coords));
}

std::string centroid_to_text(const SpaceSignature& sig) {
    auto O = centroid(sig);
    std::ostringstream os;
    os << "centroid of " << sig.to_string() << ": (";
    for (size_t i = 0; i < O.coords.size(); ++i) {
        if (i) os << ", ";
        os << rat_pretty(O.coords[i]);
    }
    os << ")\n";
    return os.str();
}

std::string centroid_to_csv(const SpaceSignature& sig) {
    auto O = centroid(sig);
    std::ostringstream os;
    for (size_t i = 0; i < O.coords.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(O.coords[i]);
    }
    os << "\n";
    return os.str();
}

namespace {

json perm_to_json(const BlockPermutation& p) {
    json out = json::array();
    for (const auto& b : p) out.push_back(b);
    return out;
}

json hull_to_json(const SupportCheck& c) {
    auto pts = project_support(c.support.sig, c.support.support);
    std::vector<RationalPoint> verts = c.support.sig.projected_dim() == 2
                                           ? hull2d(pts)
                                           : extreme_points(pts);
    json out = json::array();
    for (const auto& v : verts) {
        json pt = json::array();
        for (const auto& x : v.coords) {
            if (rat_den(x) != 1) throw internal_error("lattice hull vertex not integral");
            pt.push_back(int_to_json(rat_num(x)));
        }
        out.push_back(pt);
    }
    return out;
}

}  // namespace

std::string check_to_json(const SupportCheck& c) {
    json ws = json::array();
    for (const auto& w : c.witnesses)
        ws.push_back(json{{"permutation", perm_to_json(w.perm)},
                          {"lambda", subgroup_to_json(w.lambda)},
                          {"mu", int_to_json(w.mu_value)}});
    return dump(json{{"schema_version", kSchemaVersion},
                     {"signature", signature_to_json(c.support.sig)},
                     {"support", monomials_to_json(c.support.support)},
                     {"verdict", [&] {
                          json v = verdict_to_json(c.verdict);
                          v["classification"] = verdict_name(c.verdict);
                          return v;
                      }()},
                     {"witnesses", ws},
                     {"hull_vertices", hull_to_json(c)}});
}

std::string check_to_text(const SupportCheck& c) {
    std::ostringstream os;
    os << "support: " << c.support.support.size() << " monomials in " << c.support.sig.to_string()
       << "\n  ";
    for (size_t i = 0; i < c.support.support.size(); ++i) {
        if (i) os << " ";
        os << c.support.support[i].to_string(c.support.sig);
    }
    os << "\nverdict: " << verdict_name(c.verdict) << "  [contains="
       << (c.verdict.contains ? "true" : "false")
       << ", interior=" << (c.verdict.interior ? "true" : "false") << "]\n";
    if (c.witnesses.empty()) {
        os << "no nonnegative-weight witnesses\n";
        return os.str();
    }
    os << "witnesses with mu >= 0: " << c.witnesses.size() << "\n";
    for (const auto& w : c.witnesses) {
        os << "  perm=(";
        for (size_t t = 0; t < w.perm.size(); ++t) {
            if (t) os << " | ";
            for (size_t i = 0; i < w.perm[t].size(); ++i) {
                if (i) os << ",";
                os << w.perm[t][i];
            }
        }
        os << ")  lambda=" << w.lambda.to_string() << "  mu=" << w.mu_value.str() << "\n";
    }
    return os.str();
}

std::string check_to_csv(const SupportCheck& c) {
    std::ostringstream os;
    os << "permutation,lambda,mu\n";
    for (const auto& w : c.witnesses) {
        os << "(";
        for (size_t t = 0; t < w.perm.size(); ++t) {
            if (t) os << "|";
            for (size_t i = 0; i < w.perm[t].size(); ++i) {
                if (i) os << " ";
                os << w.perm[t][i];
            }
        }
        os << ")," << flat_ints(w.lambda.flat(), ' ') << "," << w.mu_value.str() << "\n";
    }
    return os.str();
}

std::pair<SpaceSignature, std::vector<ExponentVector>> parse_support_file(
    const std::string& text) {
    json j = parse_json(text);
    try {
        SpaceSignature sig = signature_from_json(j);
        auto mons = monomials_from_json(sig, j.at("support"));
        return {sig, std::move(mons)};
    } catch (const json::exception& e) {
        throw validation_error(std::string("support file: ") + e.what());
    }
}

std::string support_file_text(const SpaceSignature& sig,
                              const std::vector<ExponentVector>& support) {
    return dump(json{{"dims", sig.dims()},
                     {"degrees", sig.degrees()},
                     {"support", monomials_to_json(support)}});
}

}  // namespace gitstab
