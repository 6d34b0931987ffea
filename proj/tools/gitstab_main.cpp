// gitstab: GIT stability of multidegree divisors in products of projective
// spaces. Subcommands: fundamental | families | annihilators | centroid |
// check | classify | plot.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gitstab/oneps.hpp"
#include "gitstab/pipeline.hpp"
#include "gitstab/serialize.hpp"
#include "gitstab/svg.hpp"

namespace {

using namespace gitstab;

struct CommonArgs {
    std::vector<int> dims;
    std::vector<int> degrees;
    std::string format = "text";
    std::string out;
    std::string dedup = "on";
    bool no_parallel = false;
    std::string support_path;
};

void add_signature_flags(CLI::App* cmd, CommonArgs& args, bool required) {
    auto* d = cmd->add_option("--dims", args.dims, "factor dimensions, comma separated")
                  ->delimiter(',');
    auto* k = cmd->add_option("--degrees", args.degrees, "multidegree, comma separated")
                  ->delimiter(',');
    if (required) {
        d->required();
        k->required();
    }
}

void add_output_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", args.out, "write output to a file instead of stdout");
}

void emit(const CommonArgs& args, const std::string& payload) {
    if (args.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(args.out, std::ios::binary);
    if (!f) throw validation_error("cannot open output file: " + args.out);
    f << payload;
}

SpaceSignature signature_of(const CommonArgs& args) {
    return SpaceSignature(args.dims, args.degrees);
}

ClassifyOptions options_of(const CommonArgs& args) {
    ClassifyOptions opt;
    opt.dedup_symmetry = args.dedup == "on";
    opt.parallel = !args.no_parallel;
    return opt;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw validation_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run(int argc, char** argv) {
    CLI::App app{"GIT stability of multidegree divisors in products of projective spaces"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* fund = app.add_subcommand("fundamental", "enumerate the fundamental set of "
                                                   "normalised one-parameter subgroups");
    add_signature_flags(fund, args, true);
    add_output_flags(fund, args);

    auto* fams = app.add_subcommand("families", "maximal (semi-)destabilised monomial families");
    add_signature_flags(fams, args, true);
    add_output_flags(fams, args);
    fams->add_option("--dedup-symmetry", args.dedup, "group families under factor symmetry")
        ->check(CLI::IsMember({"on", "off"}));
    fams->add_flag("--no-parallel", args.no_parallel, "single-threaded execution");

    auto* anns = app.add_subcommand("annihilators", "zero-weight monomials of the strictly "
                                                    "semistable maximal families");
    add_signature_flags(anns, args, true);
    add_output_flags(anns, args);
    anns->add_option("--dedup-symmetry", args.dedup)->check(CLI::IsMember({"on", "off"}));
    anns->add_flag("--no-parallel", args.no_parallel);

    auto* cent = app.add_subcommand("centroid", "the centroid of the monomial lattice");
    add_signature_flags(cent, args, true);
    add_output_flags(cent, args);

    auto* check = app.add_subcommand("check", "decide torus-level stability of one support");
    check->add_option("--support", args.support_path, "support file (json)")->required();
    add_output_flags(check, args);
    check->add_flag("--no-parallel", args.no_parallel);

    auto* cls = app.add_subcommand("classify", "full stability classification report");
    add_signature_flags(cls, args, true);
    add_output_flags(cls, args);
    cls->add_option("--dedup-symmetry", args.dedup)->check(CLI::IsMember({"on", "off"}));
    cls->add_flag("--no-parallel", args.no_parallel);

    auto* plot = app.add_subcommand("plot", "svg picture of a planar Newton polygon");
    plot->add_option("--support", args.support_path, "support file (json)");
    add_signature_flags(plot, args, false);
    plot->add_option("--out", args.out, "output svg path (directory when plotting a whole "
                                        "classification)");
    plot->add_option("--dedup-symmetry", args.dedup)->check(CLI::IsMember({"on", "off"}));
    plot->add_flag("--no-parallel", args.no_parallel);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << std::endl;
        return 1;
    }

    if (fund->parsed()) {
        auto sig = signature_of(args);
        auto set = fundamental_set(sig);
        if (args.format == "json") emit(args, fundamental_to_json(set));
        else if (args.format == "csv") emit(args, fundamental_to_csv(set));
        else emit(args, fundamental_to_text(sig, set));
        return 0;
    }
    if (fams->parsed() || anns->parsed() || cls->parsed()) {
        auto sig = signature_of(args);
        auto report = classify(sig, options_of(args));
        std::string payload;
        if (fams->parsed())
            payload = args.format == "json" ? families_to_json(report)
                      : args.format == "csv" ? families_to_csv(report)
                                             : families_to_text(report);
        else if (anns->parsed())
            payload = args.format == "json" ? annihilators_to_json(report)
                      : args.format == "csv" ? annihilators_to_csv(report)
                                             : annihilators_to_text(report);
        else
            payload = args.format == "json" ? report_to_json(report)
                      : args.format == "csv" ? report_to_csv(report)
                                             : report_to_text(report);
        emit(args, payload);
        return 0;
    }
    if (cent->parsed()) {
        auto sig = signature_of(args);
        if (args.format == "json") emit(args, centroid_to_json(sig));
        else if (args.format == "csv") emit(args, centroid_to_csv(sig));
        else emit(args, centroid_to_text(sig));
        return 0;
    }
    if (check->parsed()) {
        auto [sig, support] = parse_support_file(read_file(args.support_path));
        auto result = check_support(sig, support, options_of(args));
        if (args.format == "json") emit(args, check_to_json(result));
        else if (args.format == "csv") emit(args, check_to_csv(result));
        else emit(args, check_to_text(result));
        return 0;
    }
    if (plot->parsed()) {
        if (!args.support_path.empty()) {
            auto [sig, support] = parse_support_file(read_file(args.support_path));
            emit(args, render_plot(sig, support));
            return 0;
        }
        if (args.dims.empty() || args.degrees.empty())
            throw validation_error("plot needs either --support or --dims/--degrees");
        auto sig = signature_of(args);
        if (args.out.empty())
            throw validation_error("plotting a whole classification needs --out DIRECTORY");
        auto report = classify(sig, options_of(args));
        std::filesystem::create_directories(args.out);
        for (size_t i = 0; i < report.semistable.size(); ++i) {
            std::ofstream f(std::filesystem::path(args.out) /
                                ("semistable_" + std::to_string(i) + ".svg"),
                            std::ios::binary);
            f << render_plot(sig, report.semistable[i].family.support);
        }
        for (size_t i = 0; i < report.unstable.size(); ++i) {
            std::ofstream f(std::filesystem::path(args.out) /
                                ("unstable_" + std::to_string(i) + ".svg"),
                            std::ios::binary);
            f << render_plot(sig, report.unstable[i].family.support);
        }
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gitstab::validation_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 3;
    }
}
