#pragma once

// The verification suite registry behind both the command-line driver and
// the acceptance gate. Every check has a stable id, a one-line claim (or
// the marker "plumbing" for infrastructure checks), a computation strategy
// for the explain command, and a deterministic executor: the same
// configuration always produces the same report.

#include <json.hpp>

#include <string>
#include <vector>

namespace slhilb {

struct SuiteConfig {
    std::string suite = "all";
    unsigned long long seed = 0;
    int truncation = 8;
    int samples = 50;
};

struct CheckRecord {
    std::string id;
    std::string suite;
    std::string claim;  // the mathematical statement, or "plumbing"
    bool pass = false;
    nlohmann::json witness;
    double wall_ms = 0.0;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CheckRecord> checks;  // sorted by id
    int passed = 0;
    int failed = 0;
    bool all_pass() const { return failed == 0; }
};

// Names accepted by run_suite, in display order ("all" runs everything).
std::vector<std::string> suite_names();
bool is_known_suite(const std::string& name);

// All registered check ids, sorted.
std::vector<std::string> check_ids();

// Runs one suite; throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const SuiteConfig& config);

// Runs a single check by id with the given configuration; throws
// std::invalid_argument for an unknown id.
CheckRecord run_check(const std::string& id, const SuiteConfig& config);

// The claim and computation strategy of a check; throws for unknown ids.
std::string explain_check(const std::string& id);

// Serialises a report (schema 1; rationals as exact strings).
nlohmann::json report_json(const SuiteReport& report);

}  // namespace slhilb
