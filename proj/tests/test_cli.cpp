// Drives the installed binary end to end: every JSON document it prints must
// validate against schema/cli-output.schema.json (a small validator for the
// subset of JSON Schema the file uses lives below), and exit codes must match
// the documented contract.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "dsturan/canonical.hpp"
#include "dsturan/construct.hpp"
#include "dsturan/double_star.hpp"
#include "dsturan/graph.hpp"
#include "dsturan/graph_io.hpp"

using nlohmann::json;
using namespace dsturan;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(DSTURAN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

std::filesystem::path temp_file(const std::string& tag) {
    return std::filesystem::temp_directory_path() /
           ("dsturan_cli_" + std::to_string(getpid()) + "_" + tag);
}

// --- validator for the schema subset in use: $ref into #/$defs, oneOf,
// type, enum, required, properties, items ---

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    return false;
}

const json& resolve(const json& root, const json& s) {
    if (!s.is_object() || !s.contains("$ref")) return s;
    const std::string ref = s.at("$ref").get<std::string>();
    REQUIRE(ref.rfind("#/", 0) == 0);
    const json* cur = &root;
    std::size_t pos = 2;
    while (pos < ref.size()) {
        const auto slash = ref.find('/', pos);
        const auto len = slash == std::string::npos ? std::string::npos : slash - pos;
        cur = &cur->at(ref.substr(pos, len));
        pos = slash == std::string::npos ? ref.size() : slash + 1;
    }
    return *cur;
}

bool valid_against(const json& root, const json& schema, const json& v) {
    const json& s = resolve(root, schema);
    if (s.contains("enum")) {
        bool hit = false;
        for (const auto& e : s.at("enum")) hit = hit || e == v;
        if (!hit) return false;
    }
    if (s.contains("type") && !type_matches(s.at("type").get<std::string>(), v)) return false;
    if (s.contains("oneOf")) {
        int hits = 0;
        for (const auto& branch : s.at("oneOf"))
            if (valid_against(root, branch, v)) ++hits;
        if (hits != 1) return false;
    }
    if (s.contains("required")) {
        if (!v.is_object()) return false;
        for (const auto& key : s.at("required"))
            if (!v.contains(key.get<std::string>())) return false;
    }
    if (s.contains("properties") && v.is_object())
        for (const auto& [key, sub] : s.at("properties").items())
            if (v.contains(key) && !valid_against(root, sub, v.at(key))) return false;
    if (s.contains("items") && v.is_array())
        for (const auto& el : v)
            if (!valid_against(root, s.at("items"), el)) return false;
    return true;
}

const json& schema() {
    static const json s = [] {
        std::ifstream f(DSTURAN_SCHEMA_PATH);
        REQUIRE(f.good());
        return json::parse(f);
    }();
    return s;
}

json parse_validated(const std::string& text) {
    INFO("output: " << text);
    const json v = json::parse(text);
    CHECK(valid_against(schema(), schema(), v));
    return v;
}

}  // namespace

TEST_CASE("formula subcommand") {
    CliRun r = run_cli("formula --n 40 --a 3 --b 24");
    REQUIRE(r.exit_code == 0);
    json j = parse_validated(r.out);
    CHECK(j["value"] == 480);
    CHECK(j["regime"] == "near-regular-tail");
    CHECK(j["p"] == 1);
    CHECK(j["q"] == 12);
    CHECK(j["modulus"] == 28);
    CHECK(j["theorem"] == "a-eq-3");

    r = run_cli("formula --n 10 --a 1 --b 2");
    REQUIRE(r.exit_code == 0);
    j = parse_validated(r.out);
    CHECK(j["value"] == 13);
    CHECK(j["regime"] == "clique-plus-remainder");
}

TEST_CASE("formula with clique counting and the connected band") {
    CliRun r = run_cli("formula --n 12 --a 2 --b 3 --k 3");
    REQUIRE(r.exit_code == 0);
    json j = parse_validated(r.out);
    CHECK(j["value"] == 40);
    CHECK(j["k"] == 3);
    CHECK(j["theorem"] == "clique-count");

    r = run_cli("formula --n 23 --a 3 --b 11 --connected");
    REQUIRE(r.exit_code == 0);
    j = parse_validated(r.out);
    CHECK(j["value"] == 128);
    CHECK(j["max_degree"] == 12);
    CHECK(j["connected"] == true);
    CHECK(j["theorem"] == "connected-band");
}

TEST_CASE("formula domain failures") {
    CliRun r = run_cli("formula --n 3 --a 1 --b 2");
    CHECK(r.exit_code == 2);
    json j = parse_validated(r.out);
    CHECK(j["command"] == "formula");
    CHECK(j.contains("error"));

    r = run_cli("formula --n 23 --a 2 --b 11 --connected");  // a must be 3
    CHECK(r.exit_code == 2);
    parse_validated(r.out);
}

TEST_CASE("construct then check round trip") {
    const auto path = temp_file("h2.g6");
    CliRun r = run_cli("construct --a 3 --b 11 --family h2 --out " + path.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());  // graph went to the file, stderr is not captured

    r = run_cli("check --a 3 --b 11 --input " + path.string());
    CHECK(r.exit_code == 0);
    json j = parse_validated(r.out);
    CHECK(j["free"] == true);
    CHECK(j["n"] == 23);
    CHECK(j["edges"] == 128);
    CHECK(j["max_degree"] == 12);
    std::filesystem::remove(path);
}

TEST_CASE("construct output formats parse back") {
    CliRun r = run_cli("construct --n 10 --a 1 --b 2");
    REQUIRE(r.exit_code == 0);
    Graph g = from_graph6(r.out.substr(0, r.out.find('\n')));
    CHECK(g.n() == 10);
    CHECK(g.edge_count() == 13);

    r = run_cli("construct --n 9 --b 4 --a 1 --family near-regular --format edges");
    REQUIRE(r.exit_code == 0);
    g = from_edge_list(r.out);
    CHECK(g.n() == 9);
    CHECK(g.edge_count() == 18);
    CHECK(g.max_degree() == 4);

    r = run_cli("construct --n 9 --b 4 --a 1 --family near-regular --format dot");
    REQUIRE(r.exit_code == 0);
    g = from_dot(r.out);
    CHECK(g.edge_count() == 18);
}

TEST_CASE("construct failures stay off stdout") {
    CliRun r = run_cli("construct --a 1 --b 2 --n 3");  // no construction covers n=3
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());

    r = run_cli("construct --a 3 --b 10 --family h2");  // b >= 11
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("check reports a witness on containment") {
    const auto path = temp_file("k9.g6");
    {
        std::ofstream f(path);
        f << to_graph6(complete_graph(9)) << "\n";
    }
    CliRun r = run_cli("check --a 3 --b 4 --input " + path.string());
    CHECK(r.exit_code == 1);
    json j = parse_validated(r.out);
    CHECK(j["free"] == false);
    REQUIRE(j.contains("witness"));
    CHECK(j["witness"]["leaves_a"].size() == 3);
    CHECK(j["witness"]["leaves_b"].size() == 4);
    std::filesystem::remove(path);
}

TEST_CASE("check rejects malformed input") {
    const auto path = temp_file("bad.g6");
    {
        std::ofstream f(path);
        f << "C\n";  // header says 4 vertices, body missing
    }
    CliRun r = run_cli("check --a 1 --b 2 --input " + path.string());
    CHECK(r.exit_code == 2);
    json j = parse_validated(r.out);
    CHECK(j["command"] == "check");
    std::filesystem::remove(path);

    r = run_cli("check --a 1 --b 2 --input /nonexistent/file.g6");
    CHECK(r.exit_code == 2);
    parse_validated(r.out);
}

TEST_CASE("oracle subcommand") {
    CliRun r = run_cli("oracle --n 8 --a 1 --b 2");
    REQUIRE(r.exit_code == 0);
    json j = parse_validated(r.out);
    CHECK(j["value"] == 12);
    CHECK(j["proven_optimal"] == true);
    REQUIRE(j["witnesses"].size() == 1);
    const Graph w = from_graph6(j["witnesses"][0].get<std::string>());
    CHECK(w.edge_count() == 12);
    CHECK(canonical_form(w) == canonical_form(cliques_plus_remainder(2, 4, 0)));
}

TEST_CASE("oracle stops at the node limit with exit 3") {
    CliRun r = run_cli("oracle --n 9 --a 3 --b 4 --node-limit 3 --no-warm-start");
    CHECK(r.exit_code == 3);
    json j = parse_validated(r.out);
    CHECK(j["proven_optimal"] == false);
    CHECK(j["nodes_explored"].get<long long>() <= 4);
}

TEST_CASE("oracle enumerate flag") {
    CliRun r = run_cli("oracle --n 4 --a 1 --b 1 --enumerate");
    REQUIRE(r.exit_code == 0);
    json j = parse_validated(r.out);
    CHECK(j["value"] == 3);
    CHECK(j["witnesses"].size() == 2);
    CHECK(j["enumerate"] == true);
}

TEST_CASE("verify sweep") {
    CliRun r = run_cli("verify --a 1..2 --b 2..5 --n 4..12 --oracle-max 6");
    REQUIRE(r.exit_code == 0);
    json j = parse_validated(r.out);
    CHECK(j["summary"]["mismatches"] == 0);
    CHECK(j["summary"]["rows"].get<long long>() > 0);
    CHECK(j["summary"]["oracle_rows"].get<long long>() > 0);
    for (const auto& row : j["rows"]) CHECK(row["ok"] == true);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("formula --n 9").exit_code == 64);  // missing --a/--b
    CHECK(run_cli("").exit_code == 64);               // a subcommand is required
    CHECK(run_cli("--help").exit_code == 0);
}
