#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "majdes/checks.hpp"

using namespace majdes;

namespace {

// Minimal structural validator for the subset of JSON Schema the shipped
// schema uses: type, required, properties, additionalProperties, items, enum.
bool matches_schema(const nlohmann::json& value, const nlohmann::json& schema) {
    if (schema.contains("enum")) {
        bool any = false;
        for (const auto& v : schema["enum"]) any = any || v == value;
        if (!any) return false;
    }
    if (!schema.contains("type")) return true;
    std::string type = schema["type"].get<std::string>();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "array") {
        if (!value.is_array()) return false;
        if (schema.contains("items"))
            for (const auto& item : value)
                if (!matches_schema(item, schema["items"])) return false;
        return true;
    }
    if (type == "object") {
        if (!value.is_object()) return false;
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) return false;
        const auto props = schema.value("properties", nlohmann::json::object());
        for (const auto& [key, v] : value.items()) {
            if (props.contains(key)) {
                if (!matches_schema(v, props[key])) return false;
            } else if (schema.contains("additionalProperties")) {
                const auto& ap = schema["additionalProperties"];
                if (ap.is_boolean() && !ap.get<bool>()) return false;
                if (ap.is_object() && !matches_schema(v, ap)) return false;
            }
        }
        return true;
    }
    return false;
}

nlohmann::json load_schema() {
    std::ifstream in(std::string(MAJDES_SOURCE_DIR) + "/schema/check_report.schema.json");
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 10);
    CHECK(suite_default_max_n("unimodality") == 30);
    CHECK_THROWS_AS(make_suite("bogus", 5), UnknownSuite);
    for (const auto& name : suite_names()) CHECK(!make_suite(name, 6).empty());
}

TEST_CASE("small runs of every suite pass") {
    for (const auto& name : suite_names()) {
        CheckReport r = run_suite(name, 6, 2);
        CHECK(r.pass);
        CHECK(r.counterexamples.empty());
        CHECK(r.completed.size() == make_suite(name, 6).size());
        CHECK(std::is_sorted(r.completed.begin(), r.completed.end()));
    }
}

TEST_CASE("counterexamples are captured and sorted") {
    std::vector<CheckCase> cases;
    cases.push_back({"z", {{"which", "z"}}, [] {
        return std::make_optional(std::make_pair(std::string("1"), std::string("2")));
    }});
    cases.push_back({"a", {{"which", "a"}}, [] {
        return std::make_optional(std::make_pair(std::string("x"), std::string("y")));
    }});
    cases.push_back({"m", {}, [] { return std::optional<std::pair<std::string, std::string>>{}; }});
    CheckReport r = run_cases("synthetic", {}, cases, 1);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexamples.size() == 2);
    CHECK(r.counterexamples[0].key == "a");
    CHECK(r.counterexamples[1].key == "z");
    CHECK(r.counterexamples[1].expected == "1");
    CHECK(r.counterexamples[1].actual == "2");
}

TEST_CASE("skip resumes without rerunning completed keys") {
    std::vector<CheckCase> cases;
    int executions = 0;
    for (std::string key : {"k1", "k2", "k3"})
        cases.push_back({key, {}, [&executions] {
            ++executions;
            return std::optional<std::pair<std::string, std::string>>{};
        }});
    CheckReport r = run_cases("synthetic", {}, cases, 1, {"k1", "k3"});
    CHECK(executions == 1);
    CHECK(r.completed == std::vector<std::string>{"k1", "k2", "k3"});
}

TEST_CASE("report json matches the shipped schema and roundtrips") {
    nlohmann::json schema = load_schema();
    CheckReport r = run_suite("catalan", 5, 2);
    nlohmann::json j = to_json(r);
    CHECK(matches_schema(j, schema));

    CheckReport back = report_from_json(j);
    CHECK(back.check_name == r.check_name);
    CHECK(back.pass == r.pass);
    CHECK(back.completed == r.completed);

    // a failing synthetic report also validates
    std::vector<CheckCase> cases{{"only", {{"n", "1"}}, [] {
        return std::make_optional(std::make_pair(std::string("p"), std::string("q")));
    }}};
    nlohmann::json bad = to_json(run_cases("synthetic", {{"max_n", "1"}}, cases, 1));
    CHECK(matches_schema(bad, schema));
    CHECK(bad["verdict"] == "fail");
}

TEST_CASE("identical runs serialize identically apart from elapsed_ms") {
    nlohmann::json a = to_json(run_suite("rsk", 5, 2));
    nlohmann::json b = to_json(run_suite("rsk", 5, 1));
    a["elapsed_ms"] = 0;
    b["elapsed_ms"] = 0;
    CHECK(a.dump() == b.dump());
}

TEST_CASE("thread cap respects MAJDES_THREADS") {
    setenv("MAJDES_THREADS", "1", 1);
    CHECK(effective_thread_count(8) == 1);
    unsetenv("MAJDES_THREADS");
    CHECK(effective_thread_count(3) == 3);
}

TEST_CASE("A-vs-enumeration cases pass on small n") {
    CheckReport r = run_cases("a-vs-enumeration", {}, a_vs_enumeration_cases(7), 2);
    CHECK(r.pass);
}
