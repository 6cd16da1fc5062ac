#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>

#include "majdes/checks.hpp"
#include "majdes/formulas.hpp"
#include "majdes/perm.hpp"
#include "majdes/serialize.hpp"

namespace {

constexpr int kUsageError = 2;

const std::set<std::string> kPatterns{"123", "132", "213", "231", "312", "321"};
const std::set<std::string> kDerivedPatterns{"123", "231", "213", "312"};

int run_dist(const std::string& pattern, int n, const std::string& format,
             const std::string& mode) {
    if (!kPatterns.count(pattern)) {
        std::cerr << "unsupported pattern: " << pattern << "\n";
        return kUsageError;
    }
    if (n < 1) {
        std::cerr << "n must be positive\n";
        return kUsageError;
    }
    majdes::BivariatePolynomial dist;
    if (mode == "direct") {
        dist = majdes::distribution(n, majdes::Permutation::parse(pattern));
    } else if (mode == "derived") {
        if (!kDerivedPatterns.count(pattern)) {
            std::cerr << "derived mode covers patterns 123, 231, 213, 312\n";
            return kUsageError;
        }
        dist = majdes::related_distribution(std::stoi(pattern), n);
    } else {
        std::cerr << "mode must be direct or derived\n";
        return kUsageError;
    }
    if (format == "json")
        std::cout << majdes::distribution_json(n, pattern, dist).dump(2) << "\n";
    else
        std::cout << dist.text() << "\n";
    return 0;
}

int run_formula(const std::string& which, int n, int k, int i, int m,
                const std::string& format) {
    majdes::QPolynomial p;
    try {
        if (which == "f2") {
            p = majdes::f_two_row({n, k, i});
        } else if (which == "f3") {
            p = majdes::f_three_row({m, k, i});
        } else if (which == "A") {
            p = majdes::a_polynomial(n, i);
        } else if (which == "catalan") {
            p = majdes::catalan_top_term(n);
        } else {
            std::cerr << "formula must be one of f2, f3, A, catalan\n";
            return kUsageError;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    }
    if (format == "json")
        std::cout << majdes::to_json(p).dump(2) << "\n";
    else
        std::cout << p.text() << "\n";
    return 0;
}

int run_check(const std::string& suite, int max_n, const std::string& out_path,
              bool resume, int threads) {
    std::vector<std::string> names = majdes::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kUsageError;
    }
    if (max_n == 0) max_n = majdes::suite_default_max_n(suite);
    if (max_n < 1) {
        std::cerr << "max-n must be positive\n";
        return kUsageError;
    }

    std::string path = out_path.empty() ? "majdes-check-" + suite + ".json" : out_path;
    std::set<std::string> skip;
    std::vector<majdes::Counterexample> prior;
    if (resume) {
        std::ifstream in(path);
        if (in) {
            try {
                majdes::CheckReport old =
                    majdes::report_from_json(nlohmann::json::parse(in));
                if (old.check_name == suite) {
                    skip.insert(old.completed.begin(), old.completed.end());
                    prior = old.counterexamples;
                }
            } catch (const std::exception& e) {
                std::cerr << "ignoring unreadable report " << path << ": " << e.what() << "\n";
            }
        }
    }

    majdes::CheckReport report = majdes::run_suite(suite, max_n, threads, skip);
    // Keep failures recorded by the interrupted run for the keys we skipped.
    for (auto& c : prior)
        if (skip.count(c.key)) report.counterexamples.push_back(std::move(c));
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const majdes::Counterexample& a, const majdes::Counterexample& b) {
                  return a.key < b.key;
              });
    report.pass = report.counterexamples.empty();

    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write report to " << path << "\n";
        return kUsageError;
    }
    out << majdes::to_json(report).dump(2) << "\n";

    std::cout << "suite=" << suite << " max_n=" << max_n
              << " cases=" << report.completed.size()
              << " verdict=" << (report.pass ? "pass" : "fail")
              << " counterexamples=" << report.counterexamples.size()
              << " elapsed_ms=" << report.elapsed_ms << " report=" << path << "\n";
    for (const auto& c : report.counterexamples)
        std::cout << "  FAIL " << c.key << ": expected " << c.expected << ", got " << c.actual
                  << "\n";
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generating functions for the major index over descents of "
                 "pattern-avoiding permutations and standard Young tableaux"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* dist = app.add_subcommand("dist", "Bivariate (maj, des) distribution over S_n(pattern)");
    std::string dist_pattern;
    int dist_n = 0;
    std::string dist_mode = "direct";
    dist->add_option("--pattern", dist_pattern, "pattern, one of 123 132 213 231 312 321")
        ->required();
    dist->add_option("-n,--length", dist_n, "permutation length")->required();
    dist->add_option("--mode", dist_mode, "direct enumeration or derived relations")
        ->check(CLI::IsMember({"direct", "derived"}));
    dist->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* formula = app.add_subcommand("formula", "Closed-form polynomials: f2, f3, A, catalan");
    std::string formula_which;
    int f_n = 0, f_k = 0, f_i = 0, f_m = 0;
    formula->add_option("which", formula_which, "f2 | f3 | A | catalan")->required();
    formula->add_option("-n", f_n, "n (f2, A, catalan)");
    formula->add_option("-k", f_k, "k (f2, f3)");
    formula->add_option("-i", f_i, "descent count (f2, f3, A)");
    formula->add_option("-m", f_m, "m (f3)");
    formula->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check", "Run an invariant suite and write a JSON report");
    std::string suite, out_path;
    int max_n = 0, threads = 0;
    bool resume = false;
    check->add_option("--suite", suite, "suite name")->required();
    check->add_option("--max-n", max_n, "sweep bound (suite default when omitted)");
    check->add_option("--out", out_path, "report path (default majdes-check-<suite>.json)");
    check->add_flag("--resume", resume, "skip tuples recorded as completed in the report");
    check->add_option("--threads", threads, "worker threads (also capped by MAJDES_THREADS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (dist->parsed()) return run_dist(dist_pattern, dist_n, format, dist_mode);
        if (formula->parsed())
            return run_formula(formula_which, f_n, f_k, f_i, f_m, format);
        if (check->parsed()) return run_check(suite, max_n, out_path, resume, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
