#include <doctest.h>

#include <json.hpp>

#include "gitstab/lattice.hpp"
#include "gitstab/oneps.hpp"
#include "gitstab/pipeline.hpp"
#include "gitstab/serialize.hpp"
#include "gitstab/svg.hpp"
#include "support/fixtures.hpp"

using namespace gitstab;

namespace {

std::vector<ExponentVector> family(const SpaceSignature& sig,
                                   const std::vector<std::vector<int>>& exps) {
    std::vector<ExponentVector> out;
    for (const auto& e : exps) out.push_back(ExponentVector::checked(sig, e));
    return out;
}

}  // namespace

TEST_CASE("report round trip is lossless") {
    for (auto sig : {SpaceSignature({1, 1}, {4, 4}), SpaceSignature({1, 1}, {1, 2})}) {
        auto report = classify(sig);
        auto text = report_to_json(report);
        auto back = report_from_json(text);
        CHECK(report_to_json(back) == text);
        CHECK(text.back() == '\n');
        CHECK(text.find('\r') == std::string::npos);          // LF only
        CHECK(text.find("schema_version") != std::string::npos);
    }
}

TEST_CASE("unsupported report documents are rejected") {
    auto report = classify(SpaceSignature({1, 1}, {1, 2}));
    auto text = report_to_json(report);
    auto bumped = text;
    auto pos = bumped.find("\"schema_version\": 1");
    REQUIRE(pos != std::string::npos);
    bumped.replace(pos, std::string("\"schema_version\": 1").size(), "\"schema_version\": 99");
    CHECK_THROWS_AS(report_from_json(bumped), validation_error);
    CHECK_THROWS_AS(report_from_json("{}"), validation_error);
}

TEST_CASE("rationals serialize as p/q strings") {
    auto sig = SpaceSignature({1, 3}, {1, 2});
    auto js = centroid_to_json(sig);
    CHECK(js.find("\"1/2\"") != std::string::npos);
    CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
    CHECK(rat_from_string("-1/2") == Rat(-1, 2));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK_THROWS_AS(rat_from_string("1/0"), validation_error);
    CHECK_THROWS_AS(rat_from_string("zebra"), validation_error);
    CHECK(rat_pretty(Rat(4, 2)) == "2");
    CHECK(rat_pretty(Rat(1, 2)) == "1/2");
}

TEST_CASE("support files round trip and validate") {
    SpaceSignature sig({1, 1}, {4, 4});
    auto support = family(sig, fixtures::kTable2[0]);
    auto text = support_file_text(sig, support);
    auto [sig2, support2] = parse_support_file(text);
    CHECK(sig2 == sig);
    REQUIRE(support2.size() == support.size());
    for (size_t i = 0; i < support.size(); ++i) CHECK(support2[i] == support[i]);

    CHECK_THROWS_AS(parse_support_file("not json at all"), validation_error);
    CHECK_THROWS_AS(parse_support_file(R"({"dims":[1,1],"degrees":[4,4]})"),
                    validation_error);
    CHECK_THROWS_AS(
        parse_support_file(R"({"dims":[1,1],"degrees":[4,4],"support":[[9,0,4,0]]})"),
        validation_error);
    CHECK_THROWS_AS(
        parse_support_file(R"({"dims":[1,0],"degrees":[4,4],"support":[]})"),
        validation_error);
}

TEST_CASE("fundamental serializations") {
    SpaceSignature sig({1, 1}, {1, 1});
    auto fund = fundamental_set(sig);
    auto js = fundamental_to_json(fund);
    CHECK(js.find("[") == 0);
    CHECK(fundamental_to_csv(fund) == "0,0,1,-1\n1,-1,0,0\n1,-1,1,-1\n");
    auto txt = fundamental_to_text(sig, fund);
    CHECK(txt.find("3 one-parameter subgroups") != std::string::npos);
    CHECK(txt.find("(1,-1 | 1,-1)") != std::string::npos);
}

TEST_CASE("csv rows cover every family monomial") {
    SpaceSignature sig({1, 1}, {4, 4});
    auto report = classify(sig);
    auto csv = report_to_csv(report);
    size_t rows = 0;
    for (char c : csv) rows += c == '\n';
    size_t expect = 1;  // header
    for (const auto& e : report.semistable) {
        expect += e.family.support.size();
        expect += e.annihilator->support.size();
    }
    for (const auto& e : report.unstable) expect += e.family.support.size();
    CHECK(rows == expect);
}

TEST_CASE("check serialization carries verdict, witnesses and hull") {
    SpaceSignature sig({1, 1}, {4, 4});
    auto chk = check_support(sig, family(sig, fixtures::kTable2[0]));
    auto js = check_to_json(chk);
    CHECK(js.find("\"classification\": \"strictly semistable (boundary)\"") !=
          std::string::npos);
    CHECK(js.find("\"hull_vertices\"") != std::string::npos);
    CHECK(js.find("\"witnesses\"") != std::string::npos);
    auto txt = check_to_text(chk);
    CHECK(txt.find("strictly semistable (boundary)") != std::string::npos);
    CHECK(txt.find("lambda=(1,-1 | 0,0)") != std::string::npos);
}

TEST_CASE("check serialization emits hull vertices beyond the plane") {
    // in projected dimension 4 hull data comes from the extreme-point LP
    SpaceSignature sig({1, 3}, {1, 2});
    auto chk = check_support(sig, family(sig, fixtures::kTable4[0]));
    auto js = nlohmann::json::parse(check_to_json(chk));
    const auto& hull = js.at("hull_vertices");
    CHECK(!hull.empty());
    CHECK(hull.front().size() == 4);
    // hull vertices are a subset of the projected support
    std::set<std::vector<int>> proj;
    for (const auto& I : chk.support.support)
        proj.insert(xi_project(sig, I).coords);
    for (const auto& v : hull) CHECK(proj.count(v.get<std::vector<int>>()) == 1);
}

TEST_CASE("exact decimal rendering") {
    CHECK(rat_to_decimal(Rat(1, 2)) == "0.5");
    CHECK(rat_to_decimal(Rat(1, 3)) == "0.333333");
    CHECK(rat_to_decimal(Rat(-1, 3)) == "-0.333333");
    CHECK(rat_to_decimal(Rat(2)) == "2");
    CHECK(rat_to_decimal(Rat(0)) == "0");
    CHECK(rat_to_decimal(Rat(1, 1000000)) == "0.000001");
    CHECK(rat_to_decimal(Rat(1, 2000000)) == "0.000001");  // rounds half up
    CHECK(rat_to_decimal(Rat(1, 3000000)) == "0");
    CHECK(rat_to_decimal(Rat(-7, 2)) == "-3.5");
}

TEST_CASE("svg plots") {
    SpaceSignature sig({1, 1}, {4, 4});
    auto support = family(sig, fixtures::kTable1[0]);
    auto svg = render_plot(sig, support);
    CHECK(svg == render_plot(sig, support));  // deterministic bytes
    CHECK(svg.rfind("<svg", 0) == 0);
    // hull of the block family is the rectangle [2,4]x[0,4]; y flips downward
    CHECK(svg.find("<polygon points=\"2,4 4,4 4,0 2,0\"") != std::string::npos);
    // centroid (2,2) lands at svg (2,2), drawn in red
    CHECK(svg.find("cx=\"2\" cy=\"2\" r=\"0.14\" fill=\"red\"") != std::string::npos);
    // 15 support dots
    size_t dots = 0, pos = 0;
    while ((pos = svg.find("r=\"0.11\"", pos)) != std::string::npos) {
        ++dots;
        pos += 1;
    }
    CHECK(dots == 15);

    SpaceSignature s12({1, 3}, {1, 2});
    try {
        render_plot(s12, enumerate_monomials(s12));
        CHECK(false);
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("hull_vertices") != std::string::npos);
    }

    // a single P^2 factor also projects to the plane; centroid is fractional
    SpaceSignature conics({2}, {2});
    auto svg2 = render_plot(conics, enumerate_monomials(conics));
    CHECK(svg2.find("<polygon points=\"0,2 2,2 0,0\"") != std::string::npos);
    CHECK(svg2.find("cx=\"0.666667\" cy=\"1.333333\" r=\"0.14\" fill=\"red\"") !=
          std::string::npos);

    // single-monomial support: no hull element, one dot plus the centroid
    auto svg1 = render_plot(sig, family(sig, {{4, 0, 4, 0}}));
    CHECK(svg1.find("<polygon") == std::string::npos);
    CHECK(svg1.find("<polyline") == std::string::npos);
}
