#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsturan/errors.hpp"
#include "dsturan/graph.hpp"

namespace dsturan {

// The pattern S_{a,b}: a central edge uv plus a extra leaves at u and b extra
// leaves at v, all a+b+2 vertices distinct. Sides of zero would degenerate to
// a star, which ex_star covers separately, so both sides must be >= 1.
struct DoubleStarPattern {
    int a;
    int b;

    DoubleStarPattern(int a_, int b_) : a(a_), b(b_) {
        if (a < 1 || b < 1)
            throw std::invalid_argument("double star sides must be >= 1, got a=" +
                                        std::to_string(a) + " b=" + std::to_string(b));
    }
};

struct DoubleStarWitness {
    int center_a = -1;  // endpoint carrying the a leaves
    int center_b = -1;  // endpoint carrying the b leaves
    std::vector<int> leaves_a;
    std::vector<int> leaves_b;
};

// True iff the edge uv can host S_{a,b} with u on the a side: u needs a
// neighbors besides v, v needs b besides u, and jointly they need a+b
// distinct ones, which after inclusion-exclusion is the single deficiency
// inequality below (sufficiency is the easy case of Hall's condition for two
// sets).
inline bool edge_hosts(const Graph& g, int u, int v, const DoubleStarPattern& p) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("edge_hosts: " + std::to_string(u) + "-" + std::to_string(v) +
                                    " is not an edge");
    const int du = g.degree(u) - 1;
    const int dv = g.degree(v) - 1;
    if (du < p.a || dv < p.b) return false;
    return du + dv - g.common_neighbor_count(u, v) >= p.a + p.b;
}

namespace detail {

// Leaf assignment once an edge is known to host: exclusive neighbors first on
// each side, then the shared pool greedily, smallest labels first. The
// deficiency inequality guarantees the pool covers whatever is missing.
inline DoubleStarWitness assign_leaves(const Graph& g, int u, int v, const DoubleStarPattern& p) {
    std::vector<int> excl_u, excl_v, common;
    for (int w : g.neighbors(u)) {
        if (w == v) continue;
        (g.has_edge(w, v) ? common : excl_u).push_back(w);
    }
    for (int w : g.neighbors(v)) {
        if (w == u) continue;
        if (!g.has_edge(w, u)) excl_v.push_back(w);
    }
    DoubleStarWitness wit;
    wit.center_a = u;
    wit.center_b = v;
    std::size_t ci = 0;
    for (std::size_t i = 0; i < excl_u.size() && wit.leaves_a.size() < static_cast<std::size_t>(p.a); ++i)
        wit.leaves_a.push_back(excl_u[i]);
    while (wit.leaves_a.size() < static_cast<std::size_t>(p.a)) wit.leaves_a.push_back(common[ci++]);
    for (std::size_t i = 0; i < excl_v.size() && wit.leaves_b.size() < static_cast<std::size_t>(p.b); ++i)
        wit.leaves_b.push_back(excl_v[i]);
    while (wit.leaves_b.size() < static_cast<std::size_t>(p.b)) wit.leaves_b.push_back(common[ci++]);
    return wit;
}

}  // namespace detail

// Scans vertices in descending degree order (ties by index), neighbors
// ascending, and returns a witness for the first hosting orientation found;
// the same graph always yields the same witness.
inline std::optional<DoubleStarWitness> contains_double_star(const Graph& g,
                                                             const DoubleStarPattern& p) {
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return g.degree(x) > g.degree(y); });
    for (int u : order) {
        if (g.degree(u) < p.a + 1) continue;
        for (int v : g.neighbors(u))
            if (edge_hosts(g, u, v, p)) return detail::assign_leaves(g, u, v, p);
    }
    return std::nullopt;
}

// Independent reference check used to validate the detector: for every
// ordered edge it tries every split of the common-neighbor pool between the
// two leaf sets. Exhaustive and slow; capped at 14 vertices.
inline bool brute_force_contains(const Graph& g, const DoubleStarPattern& p) {
    if (g.n() > 14)
        throw unsupported_size("brute_force_contains handles at most 14 vertices, got " +
                               std::to_string(g.n()));
    for (int u = 0; u < g.n(); ++u) {
        for (int v : g.neighbors(u)) {
            int eu = 0, ev = 0, c = 0;
            for (int w : g.neighbors(u))
                if (w != v) (g.has_edge(w, v) ? c : eu) += 1;
            for (int w : g.neighbors(v))
                if (w != u && !g.has_edge(w, u)) ++ev;
            for (int j = 0; j <= c; ++j)
                if (eu + j >= p.a && ev + (c - j) >= p.b) return true;
        }
    }
    return false;
}

}  // namespace dsturan
