#include <doctest.h>

#include <algorithm>
#include <set>

#include "gitstab/lattice.hpp"
#include "gitstab/oneps.hpp"
#include "gitstab/pipeline.hpp"
#include "gitstab/serialize.hpp"
#include "support/fixtures.hpp"

using namespace gitstab;

namespace {

std::set<std::vector<int>> support_set(const MonomialFamily& f) {
    std::set<std::vector<int>> out;
    for (const auto& I : f.support) out.insert(I.exps());
    return out;
}

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& v) {
    return {v.begin(), v.end()};
}

std::vector<ExponentVector> family(const SpaceSignature& sig,
                                   const std::vector<std::vector<int>>& exps) {
    std::vector<ExponentVector> out;
    for (const auto& e : exps) out.push_back(ExponentVector::checked(sig, e));
    return out;
}

std::vector<long long> flat_ll(const OneParamSubgroup& l) {
    std::vector<long long> out;
    for (const auto& w : l.flat()) out.push_back(static_cast<long long>(w));
    return out;
}

}  // namespace

TEST_CASE("classify (1,1|4,4) reproduces the reference tables") {
    SpaceSignature sig({1, 1}, {4, 4});
    auto report = classify(sig);
    CHECK(report.fundamental.size() == 13);
    CHECK(report.symmetry_deduped);
    CHECK(report.pre_dedup_semistable == 5);
    CHECK(report.pre_dedup_unstable == 4);
    REQUIRE(report.semistable.size() == 3);
    REQUIRE(report.unstable.size() == 2);

    std::set<std::set<std::vector<int>>> semis, anns, unst;
    for (const auto& e : report.semistable) {
        CHECK(e.verdict.contains);
        CHECK(!e.verdict.interior);
        semis.insert(support_set(e.family));
        REQUIRE(e.annihilator.has_value());
        anns.insert(support_set(*e.annihilator));
        CHECK(is_subset_of_family(e.annihilator->support, e.family));
    }
    for (const auto& e : report.unstable) unst.insert(support_set(e.family));

    CHECK(semis == std::set<std::set<std::vector<int>>>{as_set(fixtures::kTable1[0]),
                                                        as_set(fixtures::kTable1[1]),
                                                        as_set(fixtures::kTable1[2])});
    CHECK(anns == std::set<std::set<std::vector<int>>>{as_set(fixtures::kTable2[0]),
                                                       as_set(fixtures::kTable2[1]),
                                                       as_set(fixtures::kTable2[2])});
    CHECK(unst == std::set<std::set<std::vector<int>>>{as_set(fixtures::kTable1[3]),
                                                       as_set(fixtures::kTable1[4])});

    // named origins: each family's least origin is the reference subgroup
    std::set<std::vector<long long>> reps;
    for (const auto& e : report.semistable) reps.insert(flat_ll(e.family.lambdas.front()));
    std::set<std::vector<long long>> want;
    for (int i : {0, 1, 2})
        want.insert(std::vector<long long>(fixtures::kLambda44[static_cast<size_t>(i)].begin(),
                                           fixtures::kLambda44[static_cast<size_t>(i)].end()));
    CHECK(reps == want);
}

TEST_CASE("classify (1,3|1,2) reproduces the reference tables") {
    SpaceSignature sig({1, 3}, {1, 2});
    auto report = classify(sig);
    // the reference text reports 429 here; these conventions give 238 and the
    // acceptance suite reports the discrepancy explicitly
    CHECK(report.fundamental.size() == 238);
    CHECK(!report.symmetry_deduped);
    REQUIRE(report.semistable.size() == 5);
    CHECK(report.pre_dedup_semistable == 5);

    std::set<std::set<std::vector<int>>> semis, anns;
    for (const auto& e : report.semistable) {
        CHECK(e.verdict.contains);
        CHECK(!e.verdict.interior);
        semis.insert(support_set(e.family));
        REQUIRE(e.annihilator.has_value());
        anns.insert(support_set(*e.annihilator));
    }
    std::set<std::set<std::vector<int>>> want3, want4;
    for (const auto& col : fixtures::kTable3) want3.insert(as_set(col));
    for (const auto& col : fixtures::kTable4) want4.insert(as_set(col));
    CHECK(semis == want3);
    CHECK(anns == want4);

    // each family originates from exactly the named reference subgroup
    for (size_t i = 0; i < 5; ++i) {
        auto want_support = as_set(fixtures::kTable3[i]);
        auto it = std::find_if(report.semistable.begin(), report.semistable.end(),
                               [&](const SemistableEntry& e) {
                                   return support_set(e.family) == want_support;
                               });
        REQUIRE(it != report.semistable.end());
        REQUIRE(it->family.lambdas.size() == 1);
        CHECK(flat_ll(it->family.lambdas.front()) ==
              std::vector<long long>(fixtures::kLambda12[i].begin(),
                                     fixtures::kLambda12[i].end()));
    }
}

TEST_CASE("classification of every support of (1,1|1,1) against brute force") {
    SpaceSignature sig({1, 1}, {1, 1});
    ClassifyOptions opt;
    opt.dedup_symmetry = false;  // keep every family; the probe below uses
                                 // per-block permutations only
    auto report = classify(sig, opt);
    auto mons = enumerate_monomials(sig);
    auto fund = fundamental_set(sig);
    auto perms = block_permutations(sig);

    for (unsigned mask = 1; mask < (1u << mons.size()); ++mask) {
        std::vector<ExponentVector> s;
        for (size_t i = 0; i < mons.size(); ++i)
            if (mask >> i & 1) s.push_back(mons[i]);

        bool brute_pos = false, brute_nonneg = false;
        for (const auto& perm : perms) {
            std::vector<ExponentVector> moved;
            for (const auto& I : s) moved.push_back(apply_block_permutation(sig, I, perm));
            for (const auto& l : fund) {
                Int m = mu(moved, l);
                brute_pos = brute_pos || m > 0;
                brute_nonneg = brute_nonneg || m >= 0;
            }
        }

        // family view: not-stable iff some permutation lands inside a maximal
        // semi-destabilised family, unstable iff inside a destabilised one
        bool family_nonneg = false, family_pos = false;
        for (const auto& perm : perms) {
            std::vector<ExponentVector> moved;
            for (const auto& I : s) moved.push_back(apply_block_permutation(sig, I, perm));
            for (const auto& e : report.semistable)
                family_nonneg = family_nonneg || is_subset_of_family(moved, e.family);
            for (const auto& e : report.unstable)
                family_pos = family_pos || is_subset_of_family(moved, e.family);
        }
        CHECK(family_nonneg == brute_nonneg);
        CHECK(family_pos == brute_pos);

        // centroid view agrees; check_support asserts this internally
        auto chk = check_support(sig, s);
        CHECK(!chk.verdict.contains == brute_pos);
        CHECK(!chk.verdict.interior == brute_nonneg);
    }
}

TEST_CASE("check_support examples") {
    SpaceSignature s12({1, 3}, {1, 2});
    auto ann3 = check_support(s12, family(s12, fixtures::kTable4[3]));
    CHECK(ann3.verdict.contains);
    CHECK(!ann3.verdict.interior);
    bool has_l3 = std::any_of(ann3.witnesses.begin(), ann3.witnesses.end(),
                              [&](const SupportWitness& w) {
                                  return flat_ll(w.lambda) ==
                                             std::vector<long long>{0, 0, 1, 0, 0, -1} &&
                                         w.mu_value == 0;
                              });
    CHECK(has_l3);

    SpaceSignature s44({1, 1}, {4, 4});
    auto full = check_support(s44, enumerate_monomials(s44));
    CHECK(full.verdict.interior);
    CHECK(full.witnesses.empty());

    std::vector<std::vector<int>> ruling;
    for (int b = 0; b <= 4; ++b) ruling.push_back({4, 0, b, 4 - b});
    auto r = check_support(s44, family(s44, ruling));
    CHECK(!r.verdict.contains);
    bool l0_pos = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                              [&](const SupportWitness& w) {
                                  return flat_ll(w.lambda) ==
                                             std::vector<long long>{1, -1, 0, 0} &&
                                         w.mu_value == 4;
                              });
    CHECK(l0_pos);

    CHECK_THROWS_AS(check_support(s44, {}), validation_error);
    CHECK_THROWS_AS(
        check_support(s44, {ExponentVector::checked(s12, {1, 0, 2, 0, 0, 0})}),
        validation_error);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
    SpaceSignature sig({1, 3}, {1, 2});
    ClassifyOptions serial{true, false}, parallel{true, true};
    auto a = report_to_json(classify(sig, serial));
    auto b = report_to_json(classify(sig, parallel));
    auto c = report_to_json(classify(sig, parallel));
    CHECK(a == b);
    CHECK(b == c);
}

TEST_CASE("annihilator hulls still carry the centroid") {
    for (auto sig : {SpaceSignature({1, 1}, {4, 4}), SpaceSignature({1, 3}, {1, 2})}) {
        auto report = classify(sig);
        auto O = centroid(sig);
        for (const auto& e : report.semistable) {
            REQUIRE(e.annihilator.has_value());
            CHECK(is_subset_of_family(e.annihilator->support, e.family));
            CHECK(contains(project_support(sig, e.annihilator->support), O).contains);
        }
    }
}

TEST_CASE("every reference annihilator is a boundary support with a zero witness") {
    // closed-orbit candidates: each one sits on the hull boundary and its
    // defining subgroup appears as an identity-permutation witness at mu = 0
    SpaceSignature sig({1, 3}, {1, 2});
    auto perms = block_permutations(sig);
    for (size_t i = 0; i < fixtures::kTable4.size(); ++i) {
        auto chk = check_support(sig, family(sig, fixtures::kTable4[i]));
        CHECK(chk.verdict.contains);
        CHECK(!chk.verdict.interior);
        auto want = std::vector<long long>(fixtures::kLambda12[i].begin(),
                                           fixtures::kLambda12[i].end());
        bool witnessed = std::any_of(
            chk.witnesses.begin(), chk.witnesses.end(), [&](const SupportWitness& w) {
                return w.perm == perms.front() && flat_ll(w.lambda) == want &&
                       w.mu_value == 0;
            });
        CHECK(witnessed);
    }
}

TEST_CASE("three factor classification end to end") {
    SpaceSignature sig({1, 1, 1}, {1, 1, 1});
    auto report = classify(sig);
    CHECK(report.fundamental.size() == 10);
    CHECK(report.pre_dedup_semistable == 3);
    CHECK(report.pre_dedup_unstable == 4);
    CHECK(report.symmetry_deduped);
    REQUIRE(report.semistable.size() == 1);  // one orbit under the S3 factor swap
    REQUIRE(report.unstable.size() == 2);
    const auto& e = report.semistable.front();
    CHECK(e.family.support.size() == 6);
    CHECK(e.verdict.contains);
    CHECK(!e.verdict.interior);
    REQUIRE(e.annihilator.has_value());
    for (const auto& u : report.unstable) CHECK(u.family.support.size() == 4);

    // every nonempty support agrees between the polyhedral and weight views;
    // check_support asserts the agreement internally
    auto mons = enumerate_monomials(sig);
    REQUIRE(mons.size() == 8);
    for (unsigned mask = 1; mask < (1u << mons.size()); ++mask) {
        std::vector<ExponentVector> s;
        for (size_t i = 0; i < mons.size(); ++i)
            if (mask >> i & 1) s.push_back(mons[i]);
        CHECK_NOTHROW(check_support(sig, s));
    }
}

TEST_CASE("verdict wording") {
    CentroidVerdict v;
    v.contains = false;
    CHECK(verdict_name(v) == "unstable");
    v.contains = true;
    CHECK(verdict_name(v) == "strictly semistable (boundary)");
    v.interior = true;
    CHECK(verdict_name(v) == "stable");
}
