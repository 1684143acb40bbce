// Command-line front end: system ingestion, analysis subcommands, the
// verification harness, and report persistence.
//
// Exit codes: 0 pass, 1 check failure, 2 usage/config error, 3 resource cap.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indyn/errors.hpp"
#include "indyn/runner.hpp"
#include "indyn/version.hpp"

namespace {

indyn::RunConfig build_config(const std::string& command,
                              const std::vector<std::string>& files,
                              const std::vector<std::string>& catalogs,
                              const std::vector<std::uint64_t>& params) {
    indyn::RunConfig config;
    config.command = command;
    for (const auto& f : files) config.systems.push_back("file:" + f);
    for (std::size_t i = 0; i < catalogs.size(); ++i) {
        std::string d = catalogs[i];
        if (i < params.size()) d += ":" + std::to_string(params[i]);
        config.systems.push_back(d);
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(indyn::tool_name) + " " + std::string(indyn::tool_version) +
                 " - induced dynamical systems workbench"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::vector<std::string> catalogs;
    std::vector<std::uint64_t> params;
    std::uint64_t window = 256;
    std::size_t depth = 4;
    std::size_t lattice_n = 2;
    std::uint64_t cap = std::uint64_t{1} << 20;
    std::uint64_t seed = indyn::default_seed;
    std::string out_path;
    std::string format = "json";
    bool timings = false;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--system", files, "system description file (repeatable)");
        sub->add_option("--catalog", catalogs,
                        "catalog system: cycle, harmonic, odometer, full-shift (repeatable)");
        sub->add_option("--param", params, "catalog parameter, one per --catalog");
        sub->add_option("--window", window, "observation window for return-time sets");
        sub->add_option("--depth", depth, "cylinder depth / odometer quotient depth");
        sub->add_option("--n", lattice_n, "K_n / M_n resolution");
        sub->add_option("--cap", cap, "enumeration budget");
        sub->add_option("--seed", seed, "seed for randomized sweeps");
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_option("--format", format, "json or csv");
        sub->add_flag("--timings", timings, "include elapsed times (breaks byte-stability)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "classification and recurrence summary");
    CLI::App* induce = app.add_subcommand("induce", "enumerate K_n or M_n and their periods");
    std::string target = "hyperspace";
    induce->add_option("--target", target, "hyperspace or measures");
    CLI::App* recurrence = app.add_subcommand("recurrence", "return-time sets and analytics");
    CLI::App* joining = app.add_subcommand("joining", "joinings and disjointness of two systems");
    CLI::App* verify = app.add_subcommand("verify", "run the verification checks");
    std::string check_id = "all";
    verify->add_option("check", check_id, "check id, or 'all'");
    for (CLI::App* sub : {analyze, induce, recurrence, joining, verify}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        indyn::RunConfig config =
            build_config(app.get_subcommands().front()->get_name(), files, catalogs, params);
        config.window = window;
        config.depth = depth;
        config.lattice_n = lattice_n;
        config.cap = cap;
        config.target = target;
        config.check_id = check_id;
        config.seed = seed;
        config.out_path = out_path;
        config.format = format;
        config.timings = timings;

        indyn::Report report;
        if (config.command == "analyze") {
            report = indyn::run_analyze(config);
        } else if (config.command == "induce") {
            report = indyn::run_induce(config);
        } else if (config.command == "recurrence") {
            report = indyn::run_recurrence(config);
        } else if (config.command == "joining") {
            report = indyn::run_joining(config);
        } else {
            report = indyn::run_verify(config);
        }
        return indyn::finish(config, report);
    } catch (const indyn::cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
