// Command-line driver for the verification suites: runs named suites and
// emits machine-readable JSON reports, explains individual checks, and
// lists everything that can be run. Exit codes: 0 all checks pass, 1 any
// check fails, 2 usage error.

#include <slhilb/suites.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

int run_command(const slhilb::SuiteConfig& config, const std::string& out_path) {
    if (!slhilb::is_known_suite(config.suite)) {
        std::cerr << "error: unknown suite '" << config.suite << "'\n"
                  << "known suites:";
        for (const auto& name : slhilb::suite_names()) std::cerr << " " << name;
        std::cerr << "\nusage: hilb-verify run [--suite NAME] [--seed N] [--truncation N]"
                     " [--samples N] [--out PATH]\n";
        return 2;
    }

    slhilb::SuiteReport report = slhilb::run_suite(config);
    nlohmann::json doc = slhilb::report_json(report);

    if (out_path.empty() || out_path == "-") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return 2;
        }
        out << doc.dump(2) << "\n";
        if (!out.good()) {
            std::cerr << "error: failed while writing '" << out_path << "'\n";
            return 2;
        }
    }

    std::cerr << "suite " << config.suite << ": " << report.passed << " passed, "
              << report.failed << " failed\n";
    return report.all_pass() ? 0 : 1;
}

int explain_command(const std::string& id) {
    try {
        std::cout << slhilb::explain_check(id);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "use 'hilb-verify list' to see the available check ids\n";
        return 2;
    }
}

int list_command() {
    std::cout << "suites:\n";
    for (const auto& name : slhilb::suite_names()) std::cout << "  " << name << "\n";
    std::cout << "checks:\n";
    for (const auto& id : slhilb::check_ids()) std::cout << "  " << id << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hilb-verify: exact-arithmetic verification suites for the invariant "
                 "Hilbert scheme computation (all checks run over the rational numbers)"};
    app.require_subcommand(1);

    slhilb::SuiteConfig config;
    std::string out_path = "-";

    CLI::App* run = app.add_subcommand("run", "run a verification suite and emit a JSON report");
    run->add_option("--suite", config.suite, "suite name (see 'list'); default all");
    run->add_option("--seed", config.seed, "seed for all sampled instances (default 0)");
    run->add_option("--truncation", config.truncation,
                    "degree window for graded computations (default 8)");
    run->add_option("--samples", config.samples, "sample count per randomized check (default 50)");
    run->add_option("--out", out_path, "report path, '-' for stdout (default)");

    std::string check_id;
    CLI::App* explain =
        app.add_subcommand("explain", "print the claim and strategy of one check");
    explain->add_option("id", check_id, "check id, e.g. tangent.dimension")->required();

    app.add_subcommand("list", "list suite names and check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand("run")) return run_command(config, out_path);
    if (app.got_subcommand("explain")) return explain_command(check_id);
    return list_command();
}
