#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "dsturan/errors.hpp"
#include "dsturan/graph.hpp"

namespace dsturan {

// Isomorphism-invariant representative for graphs on at most 16 vertices:
// two graphs are isomorphic iff their canonical forms compare equal.
struct CanonicalForm {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline Graph graph_from_canonical(const CanonicalForm& c) {
    return graph_from_edges(c.n, c.edges);
}

namespace detail {

// Backtracking minimizer over vertex orderings. Orderings are restricted to
// the cells of an iterated degree refinement; within that set we take the
// ordering whose upper-triangle code (column order, edge ranking before
// non-edge) is minimal, i.e. edges packed toward the smallest pairs. Two
// prunes keep symmetric graphs cheap: per-position code comparison against
// the best suffix, and trying only one representative among twin candidates
// (vertices whose swap is an automorphism).
struct CanonSearch {
    int n = 0;
    std::array<std::uint32_t, 16> adj{};
    std::array<int, 16> cell_of{};
    std::array<int, 16> cell_at_pos{};
    std::array<int, 16> twin_of{};

    // best[p] is the p-bit chunk contributed by position p, 0 meaning edge;
    // 0xFFFFFFFF marks "not yet decided" (worse than any real chunk).
    std::array<std::uint32_t, 16> best{};
    std::array<int, 16> perm{};
    std::uint32_t placed = 0;

    void refine() {
        std::vector<int> color(n);
        for (int v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);
        normalize(color);
        for (;;) {
            // signature: own color plus sorted neighbor colors
            std::vector<std::vector<int>> sig(n);
            for (int v = 0; v < n; ++v) {
                sig[v].push_back(color[v]);
                for (int u = 0; u < n; ++u)
                    if ((adj[v] >> u) & 1) sig[v].push_back(color[u]);
                std::sort(sig[v].begin() + 1, sig[v].end());
            }
            std::vector<std::vector<int>> sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            std::vector<int> next(n);
            for (int v = 0; v < n; ++v)
                next[v] = static_cast<int>(
                    std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
            if (next == color) break;
            color = next;
        }
        for (int v = 0; v < n; ++v) cell_of[v] = color[v];
        // positions grouped by ascending cell id
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return cell_of[x] < cell_of[y]; });
        for (int p = 0; p < n; ++p) cell_at_pos[p] = cell_of[order[p]];
    }

    void normalize(std::vector<int>& color) const {
        std::vector<int> vals(color);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (int& c : color)
            c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
    }

    void find_twins() {
        for (int v = 0; v < n; ++v) twin_of[v] = v;
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                const std::uint32_t mu = adj[u] & ~(1u << v) & ~(1u << u);
                const std::uint32_t mv = adj[v] & ~(1u << u) & ~(1u << v);
                if (mu == mv && twin_of[u] == u && twin_of[v] == v) twin_of[v] = u;
            }
        // path-compress one level (chains u<-v<-w resolve since u scanned first)
        for (int v = 0; v < n; ++v) twin_of[v] = twin_of[twin_of[v]];
    }

    void run() {
        refine();
        find_twins();
        best.fill(0xFFFFFFFFu);
        rec(0);
    }

    void rec(int pos) {
        if (pos == n) return;
        // candidates: unplaced vertices of this position's cell, one per twin
        // class, tried in ascending chunk order so doomed subtrees are never
        // entered first
        std::array<std::pair<std::uint32_t, int>, 16> cand;
        int nc = 0;
        std::uint32_t seen_twin = 0;
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1) continue;
            if (cell_of[v] != cell_at_pos[pos]) continue;
            const int rep = twin_of[v];
            if ((seen_twin >> rep) & 1) continue;
            seen_twin |= 1u << rep;
            std::uint32_t chunk = 0;
            for (int i = 0; i < pos; ++i)
                chunk = (chunk << 1) | (((adj[v] >> perm[i]) & 1) ? 0u : 1u);
            cand[static_cast<std::size_t>(nc++)] = {chunk, v};
        }
        std::sort(cand.begin(), cand.begin() + nc);
        for (int t = 0; t < nc; ++t) {
            const auto [chunk, v] = cand[static_cast<std::size_t>(t)];
            if (chunk > best[pos]) break;
            if (chunk < best[pos]) {
                best[pos] = chunk;
                for (int p = pos + 1; p < n; ++p) best[p] = 0xFFFFFFFFu;
            }
            perm[pos] = v;
            placed |= 1u << v;
            rec(pos + 1);
            placed &= ~(1u << v);
        }
    }
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    if (g.n() > 16)
        throw unsupported_size("canonical_form handles at most 16 vertices, got " +
                               std::to_string(g.n()));
    CanonicalForm out;
    out.n = g.n();
    if (g.n() == 0) return out;
    detail::CanonSearch cs;
    cs.n = g.n();
    for (auto [u, v] : g.edges()) {
        cs.adj[static_cast<std::size_t>(u)] |= 1u << v;
        cs.adj[static_cast<std::size_t>(v)] |= 1u << u;
    }
    cs.run();
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u)
            if (((cs.best[static_cast<std::size_t>(v)] >> (v - 1 - u)) & 1) == 0)
                out.edges.emplace_back(u, v);
    return out;
}

}  // namespace dsturan
