#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsturan/errors.hpp"

namespace dsturan {

// Undirected simple graph on vertices 0..n-1. Adjacency is stored as one
// bitset row per vertex so neighborhood intersections run word-parallel.
// Vertices are plain ints; every public method bounds-checks them. A Graph is
// meant to be built once (add_edge) and then treated as a value.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0)
            throw std::invalid_argument("vertex count must be nonnegative, got " + std::to_string(n));
        n_ = n;
        words_ = (n + 63) / 64;
        rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
        deg_.assign(static_cast<std::size_t>(n_), 0);
    }

    int n() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    // Rejects self-loops and duplicate edges so edge counts stay exact.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        set_bit(u, v);
        set_bit(v, u);
        ++deg_[static_cast<std::size_t>(u)];
        ++deg_[static_cast<std::size_t>(v)];
        ++m_;
        assert(symmetric_at(u, v) && handshake_ok());
    }

    int degree(int v) const {
        check_vertex(v);
        return deg_[static_cast<std::size_t>(v)];
    }

    int max_degree() const {
        if (n_ == 0)
            throw std::invalid_argument("max_degree of an empty graph is undefined");
        return *std::max_element(deg_.begin(), deg_.end());
    }

    // |N(u) & N(v)|. Loops don't exist, so u and v never count themselves.
    int common_neighbor_count(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("common_neighbor_count needs two distinct vertices");
        const std::uint64_t* ru = row(u);
        const std::uint64_t* rv = row(v);
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
        return c;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(deg_[static_cast<std::size_t>(v)]));
        const std::uint64_t* rv = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = rv[w];
            while (bits) {
                const int off = std::countr_zero(bits);
                out.push_back(w * 64 + off);
                bits &= bits - 1;
            }
        }
        return out;
    }

    // Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Low-level view of one adjacency row (words() words); hot paths use it
    // for popcount intersections.
    const std::uint64_t* row(int v) const {
        return rows_.data() + static_cast<std::size_t>(v) * words_;
    }
    int words() const { return words_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
    }

    void set_bit(int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] |=
            std::uint64_t{1} << (v & 63);
    }

    bool symmetric_at(int u, int v) const { return has_edge(u, v) && has_edge(v, u); }

    bool handshake_ok() const {
        long long total = 0;
        for (int d : deg_) total += d;
        return total == 2 * m_;
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<int> deg_;
    long long m_ = 0;
};

inline Graph complete_graph(int t) {
    Graph g(t);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    return g;
}

// g1's vertices keep their labels; g2's are shifted by g1.n().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph g(g1.n() + g2.n());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    const int off = g1.n();
    for (auto [u, v] : g2.edges()) g.add_edge(off + u, off + v);
    return g;
}

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

}  // namespace dsturan
