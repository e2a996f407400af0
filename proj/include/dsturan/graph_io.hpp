#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dsturan/errors.hpp"
#include "dsturan/graph.hpp"

namespace dsturan {

// graph6 text format, bit-exact:
//   header: byte n+63 for n < 63, else byte 126 followed by three 6-bit chunks
//           of n (big-endian), each +63; n above 258047 is not supported.
//   body:   upper-triangle bits in column order x(0,1) x(0,2) x(1,2) x(0,3) ...
//           packed big-endian six per byte, zero-padded, each +63.
inline std::string to_graph6(const Graph& g) {
    const long long n = g.n();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw unsupported_size("graph6 headers stop at 258047 vertices, got " + std::to_string(n));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph from_graph6(const std::string& s) {
    if (s.empty()) throw parse_error("empty graph6 string", 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw parse_error("byte outside graph6 range [63,126]", i);
    }
    std::size_t pos = 0;
    long long n = 0;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw parse_error("graph6 8-byte size header (n > 258047) not supported", 1);
        if (s.size() < 4) throw parse_error("truncated graph6 size header", s.size());
        n = (static_cast<long long>(s[1] - 63) << 12) |
            (static_cast<long long>(s[2] - 63) << 6) |
            static_cast<long long>(s[3] - 63);
        if (n < 63)
            throw parse_error("non-canonical graph6 size header: n < 63 must use the 1-byte form", 0);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    const long long pairs = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
    if (s.size() - pos != need)
        throw parse_error("graph6 body length mismatch: expected " + std::to_string(need) +
                              " bytes, got " + std::to_string(s.size() - pos),
                          pos);
    Graph g(static_cast<int>(n));
    long long bit = 0;
    int cu = 0, cv = 1;  // walks pairs in column order
    for (std::size_t i = pos; i < s.size(); ++i) {
        const int x = s[i] - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            const int on = (x >> k) & 1;
            if (bit >= pairs) {
                if (on) throw parse_error("nonzero padding bits in graph6 body", i);
                continue;
            }
            if (on) g.add_edge(cu, cv);
            if (++cu == cv) {
                cu = 0;
                ++cv;
            }
        }
    }
    return g;
}

// Edge-list text: one "u v" line per edge with u < v, sorted. The vertex
// count is implied (max label + 1), so trailing isolated vertices do not
// survive a round trip; graph6 or DOT carry n exactly.
inline std::string to_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

namespace detail {

// Reads a base-10 vertex label at s[i..], advancing i. Reports the byte
// offset of the failure.
inline int read_label(const std::string& s, std::size_t& i) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw parse_error("expected a vertex label", i);
    long long v = 0;
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 258047) throw parse_error("vertex label too large", start);
        ++i;
    }
    return static_cast<int>(v);
}

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) ++i;
}

}  // namespace detail

inline Graph from_edge_list(const std::string& s) {
    std::vector<std::pair<int, int>> es;
    int maxv = -1;
    std::size_t i = 0;
    detail::skip_ws(s, i);
    while (i < s.size()) {
        const int u = detail::read_label(s, i);
        if (i >= s.size() || (s[i] != ' ' && s[i] != '\t'))
            throw parse_error("expected ' ' between the two labels of an edge line", i);
        detail::skip_ws(s, i);
        const int v = detail::read_label(s, i);
        if (u == v) throw parse_error("self-loop in edge list", i);
        es.emplace_back(u, v);
        maxv = std::max({maxv, u, v});
        detail::skip_ws(s, i);
    }
    Graph g(maxv + 1);
    for (auto [u, v] : es) g.add_edge(std::min(u, v), std::max(u, v));
    return g;
}

// DOT output: undirected "graph { u -- v; }" with isolated vertices listed as
// bare statements so n survives a round trip.
inline std::string to_dot(const Graph& g) {
    std::string out = "graph {\n";
    for (auto [u, v] : g.edges()) {
        out += "  ";
        out += std::to_string(u);
        out += " -- ";
        out += std::to_string(v);
        out += ";\n";
    }
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) {
            out += "  ";
            out += std::to_string(v);
            out += ";\n";
        }
    out += "}\n";
    return out;
}

// Parses the subset to_dot emits: numeric ids, "--" edges, ';' statements.
inline Graph from_dot(const std::string& s) {
    std::size_t i = 0;
    detail::skip_ws(s, i);
    if (s.compare(i, 5, "graph") != 0) throw parse_error("expected 'graph'", i);
    i += 5;
    detail::skip_ws(s, i);
    if (i >= s.size() || s[i] != '{') throw parse_error("expected '{'", i);
    ++i;
    std::vector<std::pair<int, int>> es;
    int maxv = -1;
    for (;;) {
        detail::skip_ws(s, i);
        if (i >= s.size()) throw parse_error("unterminated dot graph, expected '}'", i);
        if (s[i] == '}') {
            ++i;
            break;
        }
        const int u = detail::read_label(s, i);
        maxv = std::max(maxv, u);
        detail::skip_ws(s, i);
        if (i < s.size() && s[i] == ';') {
            ++i;  // isolated vertex statement
            continue;
        }
        if (s.compare(i, 2, "--") != 0) throw parse_error("expected '--' or ';'", i);
        i += 2;
        detail::skip_ws(s, i);
        const int v = detail::read_label(s, i);
        if (u == v) throw parse_error("self-loop in dot input", i);
        maxv = std::max(maxv, v);
        detail::skip_ws(s, i);
        if (i >= s.size() || s[i] != ';') throw parse_error("expected ';'", i);
        ++i;
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    detail::skip_ws(s, i);
    if (i != s.size()) throw parse_error("trailing content after '}'", i);
    Graph g(maxv + 1);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

}  // namespace dsturan
