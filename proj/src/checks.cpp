#include "majdes/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

#include "majdes/formulas.hpp"
#include "majdes/perm.hpp"
#include "majdes/qpoly.hpp"
#include "majdes/tableaux.hpp"

namespace majdes {

namespace {

using Failure = std::optional<std::pair<std::string, std::string>>;

Failure ok() { return std::nullopt; }
Failure fail(std::string expected, std::string actual) {
    return std::make_pair(std::move(expected), std::move(actual));
}

std::string poly_eq_key(int n, int k, int i) {
    return "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",i=" + std::to_string(i);
}

std::map<std::string, std::string> nki_params(int n, int k, int i) {
    return {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"i", std::to_string(i)}};
}

std::vector<CheckCase> unimodality_cases(int max_n) {
    std::vector<CheckCase> cases;
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            for (int i = 1; i <= k; ++i) {
                cases.push_back({poly_eq_key(n, k, i), nki_params(n, k, i), [n, k, i] {
                    QPolynomial f = f_two_row({n, k, i});
                    if (f.is_zero()) return fail("nonzero polynomial", "0");
                    ShapeReport r = shape_report(f);
                    long want_min = k + static_cast<long>(i) * i - i;
                    long want_max = static_cast<long>(n) * i - want_min;
                    if (!r.symmetric || !r.unimodal || f.min_degree() != want_min ||
                        f.max_degree() != want_max)
                        return fail("symmetric unimodal, degrees [" + std::to_string(want_min) +
                                        "," + std::to_string(want_max) + "]",
                                    std::string(r.symmetric ? "symmetric" : "non-symmetric") +
                                        (r.unimodal ? " unimodal" : " non-unimodal") +
                                        ", degrees [" + std::to_string(f.min_degree()) + "," +
                                        std::to_string(f.max_degree()) + "]: " + f.text());
                    return ok();
                }});
            }
        }
        if (n >= 4) {
            cases.push_back({"A,n=" + std::to_string(n) + ",i=2",
                             {{"A", "true"}, {"n", std::to_string(n)}, {"i", "2"}}, [n] {
                QPolynomial a = a_polynomial(n, 2);
                ShapeReport r = shape_report(a);
                if (!r.symmetric || !r.unimodal)
                    return fail("symmetric unimodal", a.text());
                return ok();
            }});
        }
    }
    return cases;
}

std::vector<CheckCase> formula_vs_oracle_cases(int max_n) {
    std::vector<CheckCase> cases;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            for (int i = 0; i <= k; ++i)
                cases.push_back({poly_eq_key(n, k, i), nki_params(n, k, i), [n, k, i] {
                    std::vector<int> parts{n - k};
                    if (k > 0) parts.push_back(k);
                    auto oracle = maj_distribution_by_descents(Shape(parts));
                    auto it = oracle.find(i);
                    QPolynomial want = it == oracle.end() ? QPolynomial() : it->second;
                    QPolynomial got = f_two_row({n, k, i});
                    if (want != got) return fail(want.text(), got.text());
                    return ok();
                }});
    return cases;
}

std::vector<CheckCase> formula_vs_recurrence_cases(int max_n) {
    std::vector<CheckCase> cases;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int i = 1; i <= k; ++i)
                cases.push_back({poly_eq_key(n, k, i), nki_params(n, k, i), [n, k, i] {
                    QPolynomial rec = f_two_row_recurrence({n, k, i});
                    QPolynomial closed = f_two_row({n, k, i});
                    if (rec != closed) return fail(rec.text(), closed.text());
                    return ok();
                }});
    return cases;
}

std::vector<CheckCase> identity_cases(int max_n) {
    std::vector<CheckCase> cases;
    for (long m = 0; m <= max_n; ++m)
        for (long n = 0; n <= max_n; ++n)
            cases.push_back({"id=1,m=" + std::to_string(m) + ",n=" + std::to_string(n),
                             {{"id", "1"}, {"m", std::to_string(m)}, {"n", std::to_string(n)}},
                             [m, n] {
                                 auto [lhs, rhs] = qbinomial_identity_check(1, {m, n});
                                 if (lhs != rhs) return fail(lhs.text(), rhs.text());
                                 return ok();
                             }});
    for (long a = 0; a <= max_n; ++a)
        for (long B = a; B <= max_n; ++B)
            cases.push_back({"id=2,a=" + std::to_string(a) + ",B=" + std::to_string(B),
                             {{"id", "2"}, {"a", std::to_string(a)}, {"B", std::to_string(B)}},
                             [a, B] {
                                 auto [lhs, rhs] = qbinomial_identity_check(2, {a, B});
                                 if (lhs != rhs) return fail(lhs.text(), rhs.text());
                                 return ok();
                             }});
    return cases;
}

std::vector<CheckCase> rsk_cases(int max_n) {
    std::vector<CheckCase> cases;
    const Permutation pat321 = Permutation::parse("321");
    for (int n = 1; n <= max_n; ++n)
        cases.push_back({"n=" + std::to_string(n), {{"n", std::to_string(n)}}, [n, pat321] {
            std::vector<int> v(static_cast<std::size_t>(n));
            std::iota(v.begin(), v.end(), 1);
            do {
                Permutation sigma(v);
                auto [p, q] = rsk(sigma);
                bool two_rows = q.rows().size() <= 2;
                bool avoids = !contains_pattern(sigma, pat321);
                if (two_rows != avoids)
                    return fail("<=2 rows iff 321-avoiding", sigma.text());
                if (p.shape() != q.shape())
                    return fail("shared shape", sigma.text());
                if (statistics(sigma).descent_set != tableau_statistics(q).descent_set)
                    return fail("Des(sigma) == Des(Q)", sigma.text());
            } while (std::next_permutation(v.begin(), v.end()));
            return ok();
        }});
    return cases;
}

std::vector<CheckCase> relation_cases(int max_n) {
    std::vector<CheckCase> cases;
    for (int pattern : {123, 231, 213, 312})
        for (int n = 1; n <= max_n; ++n)
            cases.push_back(
                {"pattern=" + std::to_string(pattern) + ",n=" + std::to_string(n),
                 {{"pattern", std::to_string(pattern)}, {"n", std::to_string(n)}},
                 [pattern, n] {
                     BivariatePolynomial derived = related_distribution(pattern, n);
                     BivariatePolynomial direct =
                         distribution(n, Permutation::parse(std::to_string(pattern)));
                     if (derived != direct) return fail(direct.text(), derived.text());
                     return ok();
                 }});
    return cases;
}

std::vector<CheckCase> catalan_cases(int max_n) {
    std::vector<CheckCase> cases;
    for (int n = 2; n <= max_n; ++n)
        cases.push_back({"n=" + std::to_string(n), {{"n", std::to_string(n)}}, [n] {
            QPolynomial want = distribution(n, Permutation::parse("321")).term(n / 2);
            QPolynomial got = catalan_top_term(n);
            if (want != got) return fail(want.text(), got.text());
            return ok();
        }});
    return cases;
}

std::vector<CheckCase> three_row_cases(int max_n) {
    std::vector<CheckCase> cases;
    constexpr int kOracleLimit = 13;
    for (int m = 1; m + 2 <= max_n; ++m) {
        for (int k = 1; k <= m && m + k + 1 <= max_n; ++k) {
            for (int i = 2; i <= k + 2; ++i) {
                std::string key = "m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                                  ",i=" + std::to_string(i);
                cases.push_back({key,
                                 {{"m", std::to_string(m)},
                                  {"k", std::to_string(k)},
                                  {"i", std::to_string(i)}},
                                 [m, k, i] {
                    QPolynomial closed = f_three_row({m, k, i});
                    QPolynomial rec = f_three_row_recurrence({m, k, i});
                    if (closed != rec) return fail(rec.text(), closed.text());
                    if (m + k + 1 <= kOracleLimit) {
                        auto oracle = maj_distribution_by_descents(Shape({m, k, 1}));
                        auto it = oracle.find(i);
                        QPolynomial want = it == oracle.end() ? QPolynomial() : it->second;
                        if (want != closed) return fail(want.text(), closed.text());
                    }
                    return ok();
                }});
            }
            cases.push_back({"relation,m=" + std::to_string(m) + ",k=" + std::to_string(k),
                             {{"relation", "i=2"},
                              {"m", std::to_string(m)},
                              {"k", std::to_string(k)}},
                             [m, k] {
                // q * f_{(m,k,1),2} = f_{(m+1,k+1),2}; the two-row side has
                // n = m+k+2.
                QPolynomial lhs = f_three_row({m, k, 2}).shifted(1);
                QPolynomial rhs = f_two_row({m + k + 2, k + 1, 2});
                if (lhs != rhs) return fail(rhs.text(), lhs.text());
                return ok();
            }});
        }
    }
    return cases;
}

std::vector<CheckCase> bijection_cases(int max_n) {
    std::vector<CheckCase> cases;
    for (int m = 1; m + 2 <= max_n; ++m)
        for (int k = 1; k <= m && m + k + 1 <= max_n; ++k)
            cases.push_back({"m=" + std::to_string(m) + ",k=" + std::to_string(k),
                             {{"m", std::to_string(m)}, {"k", std::to_string(k)}}, [m, k] {
                std::vector<StandardYoungTableau> domain;
                for_each_syt(Shape({m, k, 1}), [&](const StandardYoungTableau& t) {
                    if (tableau_statistics(t).des == 2) domain.push_back(t);
                });
                std::vector<StandardYoungTableau> image;
                for (const auto& t : domain) {
                    StandardYoungTableau out = mk1_bijection(t);
                    if (out.shape() != Shape({m + 1, k + 1}))
                        return fail("shape (m+1,k+1)", out.text());
                    auto st_in = tableau_statistics(t);
                    auto st_out = tableau_statistics(out);
                    if (st_out.des != 2 || st_out.maj != st_in.maj + 1)
                        return fail("2 descents, maj+1", t.text() + " -> " + out.text());
                    if (mk1_bijection_inverse(out) != t)
                        return fail("roundtrip identity", t.text());
                    image.push_back(out);
                }
                std::sort(image.begin(), image.end());
                if (std::adjacent_find(image.begin(), image.end()) != image.end())
                    return fail("injective image", "duplicate image tableau");
                std::vector<StandardYoungTableau> codomain;
                for_each_syt(Shape({m + 1, k + 1}), [&](const StandardYoungTableau& t) {
                    if (tableau_statistics(t).des == 2) codomain.push_back(t);
                });
                if (image.size() != codomain.size())
                    return fail(std::to_string(codomain.size()) + " images",
                                std::to_string(image.size()) + " images");
                return ok();
            }});
    return cases;
}

std::vector<CheckCase> non_unimodality_132_cases(int max_n) {
    std::vector<CheckCase> cases;
    for (int n = 5; n <= max_n; ++n)
        cases.push_back({"n=" + std::to_string(n), {{"n", std::to_string(n)}}, [n] {
            BivariatePolynomial dist = distribution(n, Permutation::parse("132"));
            QPolynomial g1 = dist.term(1);
            QPolynomial g2 = dist.term(2);
            if (shape_report(g2).unimodal) return fail("non-unimodal g_{132,n,2}", g2.text());
            if (shape_report(g1).symmetric) return fail("non-symmetric g_{132,n,1}", g1.text());
            auto low = g132_low_coefficients(n);
            if (g2.coefficient(3) != low[0] || g2.coefficient(4) != low[1] ||
                g2.coefficient(5) != low[2])
                return fail(low[0].get_str() + "*q^3 + " + low[1].get_str() + "*q^4 + " +
                                low[2].get_str() + "*q^5 + ...",
                            g2.text());
            QPolynomial closed;
            for (int i = 1; i <= n - 1; ++i)
                closed = closed + QPolynomial::monomial(n - i, i);
            if (g1 != closed) return fail(closed.text(), g1.text());
            return ok();
        }});
    return cases;
}

}  // namespace

std::vector<CheckCase> a_vs_enumeration_cases(int max_n) {
    std::vector<CheckCase> cases;
    for (int n = 1; n <= max_n; ++n)
        cases.push_back({"n=" + std::to_string(n), {{"n", std::to_string(n)}}, [n] {
            BivariatePolynomial direct = distribution(n, Permutation::parse("321"));
            for (int i = 0; i <= n / 2 + 1; ++i) {
                QPolynomial want = direct.term(i);
                QPolynomial got = a_polynomial(n, i);
                if (want != got)
                    return fail("i=" + std::to_string(i) + ": " + want.text(),
                                "i=" + std::to_string(i) + ": " + got.text());
            }
            return ok();
        }});
    return cases;
}

std::vector<std::string> suite_names() {
    return {"unimodality", "formula-vs-oracle", "formula-vs-recurrence", "identities",
            "rsk",         "relations",         "catalan",               "three-row",
            "bijection",   "non-unimodality-132"};
}

int suite_default_max_n(const std::string& suite) {
    if (suite == "unimodality") return 30;
    if (suite == "formula-vs-oracle") return 14;
    if (suite == "formula-vs-recurrence") return 30;
    if (suite == "identities") return 25;
    if (suite == "rsk") return 8;
    if (suite == "relations") return 9;
    if (suite == "catalan") return 11;
    if (suite == "three-row") return 24;
    if (suite == "bijection") return 10;
    if (suite == "non-unimodality-132") return 10;
    throw UnknownSuite(suite);
}

std::vector<CheckCase> make_suite(const std::string& suite, int max_n) {
    if (suite == "unimodality") return unimodality_cases(max_n);
    if (suite == "formula-vs-oracle") return formula_vs_oracle_cases(max_n);
    if (suite == "formula-vs-recurrence") return formula_vs_recurrence_cases(max_n);
    if (suite == "identities") return identity_cases(max_n);
    if (suite == "rsk") return rsk_cases(max_n);
    if (suite == "relations") return relation_cases(max_n);
    if (suite == "catalan") return catalan_cases(max_n);
    if (suite == "three-row") return three_row_cases(max_n);
    if (suite == "bijection") return bijection_cases(max_n);
    if (suite == "non-unimodality-132") return non_unimodality_132_cases(max_n);
    throw UnknownSuite(suite);
}

int effective_thread_count(int requested) {
    int count = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (count < 1) count = 1;
    if (const char* env = std::getenv("MAJDES_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) count = std::min(count, cap);
    }
    return count;
}

CheckReport run_cases(const std::string& name,
                      std::map<std::string, std::string> parameters,
                      std::vector<CheckCase> cases, int threads,
                      const std::set<std::string>& skip) {
    auto start = std::chrono::steady_clock::now();
    CheckReport report;
    report.check_name = name;
    report.parameters = std::move(parameters);

    std::vector<const CheckCase*> todo;
    for (const auto& c : cases) {
        if (skip.count(c.key))
            report.completed.push_back(c.key);
        else
            todo.push_back(&c);
    }

    int workers = std::min(effective_thread_count(threads),
                           std::max(static_cast<int>(todo.size()), 1));
    std::atomic<std::size_t> next{0};
    std::mutex sink;
    auto work = [&] {
        for (;;) {
            std::size_t at = next.fetch_add(1);
            if (at >= todo.size()) return;
            const CheckCase& c = *todo[at];
            Failure f = c.run();
            std::lock_guard lock(sink);
            report.completed.push_back(c.key);
            if (f) report.counterexamples.push_back({c.key, c.parameters, f->first, f->second});
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::sort(report.completed.begin(), report.completed.end());
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) { return a.key < b.key; });
    report.pass = report.counterexamples.empty();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

CheckReport run_suite(const std::string& suite, int max_n, int threads,
                      const std::set<std::string>& skip) {
    return run_cases(suite, {{"suite", suite}, {"max_n", std::to_string(max_n)}},
                     make_suite(suite, max_n), threads, skip);
}

nlohmann::json to_json(const CheckReport& report) {
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const auto& c : report.counterexamples)
        counterexamples.push_back({{"key", c.key},
                                   {"parameters", c.parameters},
                                   {"expected", c.expected},
                                   {"actual", c.actual}});
    return {{"check_name", report.check_name},
            {"parameters", report.parameters},
            {"verdict", report.pass ? "pass" : "fail"},
            {"counterexamples", std::move(counterexamples)},
            {"elapsed_ms", report.elapsed_ms},
            {"completed", report.completed}};
}

CheckReport report_from_json(const nlohmann::json& j) {
    CheckReport report;
    report.check_name = j.at("check_name").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items())
        report.parameters[k] = v.get<std::string>();
    report.pass = j.at("verdict").get<std::string>() == "pass";
    for (const auto& c : j.at("counterexamples")) {
        Counterexample ce;
        ce.key = c.at("key").get<std::string>();
        for (const auto& [k, v] : c.at("parameters").items())
            ce.parameters[k] = v.get<std::string>();
        ce.expected = c.at("expected").get<std::string>();
        ce.actual = c.at("actual").get<std::string>();
        report.counterexamples.push_back(std::move(ce));
    }
    report.elapsed_ms = j.at("elapsed_ms").get<long>();
    if (j.contains("completed"))
        for (const auto& k : j.at("completed")) report.completed.push_back(k.get<std::string>());
    return report;
}

}  // namespace majdes
