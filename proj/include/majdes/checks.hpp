#pragma once

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace majdes {

struct UnknownSuite : std::invalid_argument {
    explicit UnknownSuite(const std::string& name)
        : std::invalid_argument("unknown check suite: " + name) {}
};

struct Counterexample {
    std::string key;
    std::map<std::string, std::string> parameters;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string check_name;
    std::map<std::string, std::string> parameters;
    bool pass = true;  // pass <=> counterexamples empty
    std::vector<Counterexample> counterexamples;
    long elapsed_ms = 0;
    std::vector<std::string> completed;  // sorted keys of finished cases, for --resume
};

/// One parameter tuple of a suite. run() returns nullopt on pass and the
/// (expected, actual) canonical renderings on failure.
struct CheckCase {
    std::string key;
    std::map<std::string, std::string> parameters;
    std::function<std::optional<std::pair<std::string, std::string>>()> run;
};

std::vector<std::string> suite_names();
int suite_default_max_n(const std::string& suite);
std::vector<CheckCase> make_suite(const std::string& suite, int max_n);

/// a_polynomial(n,i) against the t^i coefficients of directly enumerated
/// 321-avoider distributions, end to end. Used by the acceptance harness; not
/// one of the CLI suites.
std::vector<CheckCase> a_vs_enumeration_cases(int max_n);

/// Worker count: requested (or hardware) capped by the MAJDES_THREADS env var.
int effective_thread_count(int requested);

/// Runs cases in parallel, skipping keys in `skip`; counterexamples and the
/// completed list come back sorted so output is deterministic.
CheckReport run_cases(const std::string& name,
                      std::map<std::string, std::string> parameters,
                      std::vector<CheckCase> cases, int threads = 0,
                      const std::set<std::string>& skip = {});

CheckReport run_suite(const std::string& suite, int max_n, int threads = 0,
                      const std::set<std::string>& skip = {});

nlohmann::json to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::json& j);

}  // namespace majdes
