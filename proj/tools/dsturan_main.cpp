// Command line front end: closed-form Turan numbers for double stars, the
// matching extremal constructions, a containment checker, and the exact
// branch-and-bound search for cross-checking the formulas at small n.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsturan/dsturan.hpp"

using nlohmann::json;

namespace {

struct Range {
    long long lo = 0;
    long long hi = 0;
};

Range parse_range(const std::string& s) {
    const auto pos = s.find("..");
    Range r;
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stoll(s);
        } else {
            r.lo = std::stoll(s.substr(0, pos));
            r.hi = std::stoll(s.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or LO..HI, got '" + s + "'");
    }
    if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range '" + s + "'");
    return r;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw dsturan::parse_error("cannot open input file: " + path, 0);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

dsturan::Graph parse_graph(const std::string& text, const std::string& format) {
    if (format == "g6") {
        std::string line = text;
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        return dsturan::from_graph6(line);
    }
    if (format == "edges") return dsturan::from_edge_list(text);
    return dsturan::from_dot(text);
}

std::string render_graph(const dsturan::Graph& g, const std::string& format) {
    if (format == "g6") return dsturan::to_graph6(g) + "\n";
    if (format == "edges") return dsturan::to_edge_list(g);
    return dsturan::to_dot(g);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail_domain(const std::string& command, const std::exception& e, bool bound) {
    json j{{"command", command}, {"error", e.what()}};
    if (bound) j["violated_bound"] = e.what();
    emit(j);
    std::cerr << command << ": " << e.what() << "\n";
    return 2;
}

int run_formula(long long n, long long a, long long b, std::optional<long long> k, bool connected) {
    json j{{"command", "formula"}, {"n", n}, {"a", a}, {"b", b}};
    if (connected) {
        if (a != 3) throw dsturan::domain_error("--connected applies to a=3 only");
        const auto ce = dsturan::connected_extremal_edges(n, b);
        j["connected"] = true;
        j["value"] = ce.edges;
        j["max_degree"] = ce.max_degree;
        j["theorem"] = "connected-band";
        emit(j);
        return 0;
    }
    if (k) {
        const auto f = dsturan::ex_generalized_clique(n, a, b, *k);
        j["k"] = *k;
        j["value"] = f.value;
        j["regime"] = dsturan::to_string(f.regime);
        j["p"] = f.decomp.p;
        j["q"] = f.decomp.q;
        j["modulus"] = f.decomp.modulus;
        j["theorem"] = "clique-count";
        emit(j);
        return 0;
    }
    const auto f = dsturan::ex_dispatch(n, a, b);
    if (!f)
        throw dsturan::domain_error("no closed form covers n=" + std::to_string(n) +
                                    " a=" + std::to_string(a) + " b=" + std::to_string(b));
    j["value"] = f->value;
    j["regime"] = dsturan::to_string(f->regime);
    j["p"] = f->decomp.p;
    j["q"] = f->decomp.q;
    j["modulus"] = f->decomp.modulus;
    j["theorem"] = a == 1 ? "a-eq-1" : a == 2 ? "a-eq-2" : a == 3 ? "a-eq-3" : "general-small-q";
    if (f->regime == dsturan::RegimeLabel::GeneralQSmall) j["theorem"] = "general-small-q";
    emit(j);
    return 0;
}

int run_construct(long long n, long long a, long long b, std::optional<long long> q,
                  const std::string& family, const std::string& format, const std::string& out) {
    dsturan::Graph g(0);
    if (family == "auto") {
        auto og = dsturan::extremal_graph(n, a, b);
        if (!og)
            throw dsturan::domain_error("no extremal construction covers n=" + std::to_string(n) +
                                        " a=" + std::to_string(a) + " b=" + std::to_string(b));
        g = *og;
    } else if (family == "cliques") {
        const auto d = dsturan::decompose(n, a + b + 1);
        g = dsturan::cliques_plus_remainder(d.p, d.modulus, d.q);
    } else if (family == "near-regular") {
        g = dsturan::near_regular(static_cast<int>(n), static_cast<int>(b));
    } else if (family == "h2") {
        g = dsturan::build_h2(static_cast<int>(b));
    } else if (family == "h3") {
        g = dsturan::build_h3(static_cast<int>(b));
    } else if (family == "h-general") {
        if (!q) throw dsturan::domain_error("--family h-general requires --q");
        g = dsturan::build_h_general(static_cast<int>(a), static_cast<int>(b),
                                     static_cast<int>(*q));
    } else {
        throw dsturan::domain_error("unknown family: " + family);
    }
    const std::string text = render_graph(g, format);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw dsturan::parse_error("cannot open output file: " + out, 0);
        f << text;
    }
    std::cerr << "n=" << g.n() << " edges=" << g.edge_count()
              << " max_degree=" << (g.n() > 0 ? g.max_degree() : 0) << "\n";
    return 0;
}

int run_check(long long a, long long b, const std::string& input, const std::string& format) {
    const dsturan::Graph g = parse_graph(read_input(input), format);
    const dsturan::DoubleStarPattern pat(static_cast<int>(a), static_cast<int>(b));
    const auto w = dsturan::contains_double_star(g, pat);
    json j{{"command", "check"}, {"a", a},
           {"b", b},             {"n", g.n()},
           {"edges", g.edge_count()}, {"max_degree", g.n() > 0 ? g.max_degree() : 0},
           {"free", !w.has_value()}};
    if (w)
        j["witness"] = json{{"center_a", w->center_a},
                            {"center_b", w->center_b},
                            {"leaves_a", w->leaves_a},
                            {"leaves_b", w->leaves_b}};
    emit(j);
    std::cerr << (w ? "contains" : "free") << " S_{" << a << "," << b << "}, n=" << g.n()
              << " edges=" << g.edge_count() << "\n";
    return w ? 1 : 0;
}

int run_oracle(long long n, long long a, long long b, const dsturan::SearchConfig& cfg,
               bool enumerate) {
    dsturan::SearchResult r;
    if (enumerate) {
        r = dsturan::enumerate_extremal(static_cast<int>(n), static_cast<int>(a),
                                        static_cast<int>(b), cfg);
    } else {
        r = dsturan::max_edges_free(static_cast<int>(n), static_cast<int>(a), static_cast<int>(b),
                                    cfg);
    }
    json witnesses = json::array();
    for (const auto& c : r.witnesses)
        witnesses.push_back(dsturan::to_graph6(dsturan::graph_from_canonical(c)));
    emit(json{{"command", "oracle"},
              {"n", n},
              {"a", a},
              {"b", b},
              {"value", r.value},
              {"proven_optimal", r.proven_optimal},
              {"nodes_explored", r.nodes_explored},
              {"enumerate", enumerate},
              {"witnesses", witnesses}});
    std::cerr << "max edges " << r.value << (r.proven_optimal ? " (proven)" : " (not proven)")
              << ", " << r.nodes_explored << " nodes\n";
    return r.proven_optimal ? 0 : 3;
}

int run_verify(const Range& ra, const Range& rb, const Range& rn, long long oracle_max,
               int threads) {
    json rows = json::array();
    long long mismatches = 0, oracle_rows = 0;
    std::fprintf(stderr, "%4s %3s %3s %10s %10s %10s %6s %4s\n", "n", "a", "b", "formula",
                 "oracle", "constr", "free", "ok");
    for (long long a = ra.lo; a <= ra.hi; ++a)
        for (long long b = std::max(rb.lo, a + 1); b <= rb.hi; ++b)
            for (long long n = rn.lo; n <= rn.hi; ++n) {
                const auto f = dsturan::ex_dispatch(n, a, b);
                if (!f) continue;
                json row{{"n", n}, {"a", a}, {"b", b}, {"formula", f->value}};
                bool ok = true;
                std::string oracle_txt = "-", constr_txt = "-", free_txt = "-";
                const auto og = dsturan::extremal_graph(n, a, b);
                if (og) {
                    const bool free =
                        !dsturan::contains_double_star(
                             *og, dsturan::DoubleStarPattern(static_cast<int>(a),
                                                             static_cast<int>(b)))
                             .has_value();
                    row["construction_edges"] = og->edge_count();
                    row["construction_free"] = free;
                    constr_txt = std::to_string(og->edge_count());
                    free_txt = free ? "yes" : "NO";
                    if (!free || og->edge_count() != f->value) ok = false;
                } else {
                    ok = false;
                }
                if (n <= oracle_max) {
                    dsturan::SearchConfig cfg;
                    cfg.threads = threads;
                    const auto r = dsturan::max_edges_free(static_cast<int>(n),
                                                           static_cast<int>(a),
                                                           static_cast<int>(b), cfg);
                    ++oracle_rows;
                    row["oracle"] = r.value;
                    row["oracle_proven"] = r.proven_optimal;
                    oracle_txt = std::to_string(r.value);
                    if (!r.proven_optimal || r.value != f->value) ok = false;
                }
                row["ok"] = ok;
                if (!ok) ++mismatches;
                rows.push_back(row);
                std::fprintf(stderr, "%4lld %3lld %3lld %10lld %10s %10s %6s %4s\n", n, a, b,
                             f->value, oracle_txt.c_str(), constr_txt.c_str(), free_txt.c_str(),
                             ok ? "ok" : "BAD");
            }
    emit(json{{"command", "verify"},
              {"rows", rows},
              {"summary", json{{"rows", rows.size()},
                               {"mismatches", mismatches},
                               {"oracle_rows", oracle_rows}}}});
    std::cerr << rows.size() << " rows, " << mismatches << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Turan numbers, extremal constructions, and an exact search oracle for "
                 "double stars S_{a,b}"};
    app.require_subcommand(1);

    long long n = 0, a = 1, b = 2;
    std::optional<long long> kk, qq;
    bool connected = false;

    auto* formula = app.add_subcommand("formula", "evaluate the closed-form maximum edge count");
    formula->add_option("--n", n, "number of vertices")->required();
    formula->add_option("--a", a, "small side of the double star")->required();
    formula->add_option("--b", b, "large side of the double star")->required();
    long long kval = 0;
    auto* kopt = formula->add_option("--k", kval, "count K_k subgraphs instead of edges (k >= 3)");
    formula->add_flag("--connected", connected, "restrict to connected graphs (a=3 band)");

    auto* construct = app.add_subcommand("construct", "emit an extremal graph");
    std::string family = "auto", format = "g6", out;
    construct->add_option("--n", n, "number of vertices");
    construct->add_option("--a", a, "small side")->required();
    construct->add_option("--b", b, "large side")->required();
    long long qval = 0;
    auto* qopt = construct->add_option("--q", qval, "remainder parameter for h-general");
    construct->add_option("--family", family, "auto|cliques|near-regular|h2|h3|h-general")
        ->check(CLI::IsMember({"auto", "cliques", "near-regular", "h2", "h3", "h-general"}));
    construct->add_option("--format", format, "g6|edges|dot")
        ->check(CLI::IsMember({"g6", "edges", "dot"}));
    construct->add_option("--out", out, "output file (default stdout)");

    auto* check = app.add_subcommand("check", "test a graph for S_{a,b} containment");
    std::string input = "-", informat = "g6";
    check->add_option("--a", a, "small side")->required();
    check->add_option("--b", b, "large side")->required();
    check->add_option("--input", input, "graph file, or - for stdin");
    check->add_option("--format", informat, "g6|edges|dot")
        ->check(CLI::IsMember({"g6", "edges", "dot"}));

    auto* oracle = app.add_subcommand("oracle", "exact maximum edge search by branch and bound");
    dsturan::SearchConfig cfg;
    bool enumerate = false, no_cap = false, no_warm = false;
    oracle->add_option("--n", n, "number of vertices")->required();
    oracle->add_option("--a", a, "small side")->required();
    oracle->add_option("--b", b, "large side")->required();
    oracle->add_option("--node-limit", cfg.node_limit, "stop after this many search nodes");
    oracle->add_option("--time-limit-ms", cfg.time_limit_ms, "stop after this many milliseconds");
    oracle->add_option("--threads", cfg.threads, "worker threads");
    oracle->add_flag("--enumerate", enumerate, "collect every optimal isomorphism class");
    oracle->add_flag("--no-degree-cap", no_cap, "search without the a+b degree cap");
    oracle->add_flag("--no-warm-start", no_warm, "start without a constructed incumbent");

    auto* verify = app.add_subcommand("verify", "sweep formulas against constructions and search");
    std::string astr = "1..3", bstr = "2..10", nstr = "3..40";
    long long oracle_max = 8, bmax = 0, nmax = 0;
    int vthreads = 1;
    verify->add_option("--a", astr, "a range, N or LO..HI");
    verify->add_option("--b", bstr, "b range, N or LO..HI");
    verify->add_option("--n", nstr, "n range, N or LO..HI");
    auto* bmaxopt = verify->add_option("--b-max", bmax, "shorthand for --b 2..X");
    auto* nmaxopt = verify->add_option("--n-max", nmax, "shorthand for --n 3..X");
    verify->add_option("--oracle-max", oracle_max, "run the search oracle for n up to this");
    verify->add_option("--threads", vthreads, "oracle worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    if (kopt->count() > 0) kk = kval;
    if (qopt->count() > 0) qq = qval;
    if (bmaxopt->count() > 0) bstr = "2.." + std::to_string(bmax);
    if (nmaxopt->count() > 0) nstr = "3.." + std::to_string(nmax);
    cfg.enumerate_all = enumerate;
    cfg.degree_cap_enabled = !no_cap;
    cfg.warm_start = !no_warm;

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (formula->parsed()) return run_formula(n, a, b, kk, connected);
        if (construct->parsed()) return run_construct(n, a, b, qq, family, format, out);
        if (check->parsed()) return run_check(a, b, input, informat);
        if (oracle->parsed()) return run_oracle(n, a, b, cfg, enumerate);
        return run_verify(parse_range(astr), parse_range(bstr), parse_range(nstr), oracle_max,
                          vthreads);
    } catch (const dsturan::domain_error& e) {
        if (construct->parsed()) {
            std::cerr << cmd << ": " << e.what() << "\n";
            return 2;
        }
        return fail_domain(cmd, e, true);
    } catch (const dsturan::parse_error& e) {
        if (construct->parsed()) {
            std::cerr << cmd << ": " << e.what() << "\n";
            return 2;
        }
        return fail_domain(cmd, e, false);
    } catch (const std::exception& e) {
        if (construct->parsed()) {
            std::cerr << cmd << ": " << e.what() << "\n";
            return 2;
        }
        return fail_domain(cmd, e, false);
    }
}
