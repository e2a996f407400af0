#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dsturan/errors.hpp"
#include "dsturan/formulas.hpp"
#include "dsturan/graph.hpp"

namespace dsturan {

// p disjoint K_m's followed by one K_q, labels in block order.
inline Graph cliques_plus_remainder(long long p, long long m, long long q) {
    if (p < 0) throw std::invalid_argument("cliques_plus_remainder requires p >= 0");
    if (m < 1) throw std::invalid_argument("cliques_plus_remainder requires m >= 1");
    if (q < 0 || q >= m)
        throw std::invalid_argument("cliques_plus_remainder requires 0 <= q < m, got q=" +
                                    std::to_string(q) + " m=" + std::to_string(m));
    const long long total = p * m + q;
    if (total > 1000000)
        throw unsupported_size("refusing to materialize " + std::to_string(total) + " vertices");
    Graph g(static_cast<int>(total));
    for (long long blk = 0; blk < p; ++blk) {
        const int base = static_cast<int>(blk * m);
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v) g.add_edge(base + u, base + v);
    }
    const int base = static_cast<int>(p * m);
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v) g.add_edge(base + u, base + v);
    return g;
}

// r-regular circulant when rn is even, else regular except one vertex of
// degree r-1. Offsets 1..r/2 around the cycle; an odd r adds a perfect
// matching (antipodal for even n; for odd n the matching i ~ i+(n-1)/2,
// i < (n-1)/2, touches every vertex but n-1 exactly once).
inline Graph near_regular(int n, int r) {
    if (r < 0) throw std::invalid_argument("near_regular requires r >= 0");
    if (n < r + 1)
        throw std::invalid_argument("near_regular requires n >= r+1, got n=" + std::to_string(n) +
                                    " r=" + std::to_string(r));
    Graph g(n);
    for (int off = 1; off <= r / 2; ++off)
        for (int i = 0; i < n; ++i) {
            const int j = (i + off) % n;
            if (!g.has_edge(i, j)) g.add_edge(i, j);
        }
    if (r % 2 == 1) {
        if (n % 2 == 0) {
            for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
        } else {
            for (int i = 0; i < (n - 1) / 2; ++i) g.add_edge(i, i + (n - 1) / 2);
        }
    }
    return g;
}

// Labeled Havel-Hakimi: repeatedly satisfy the vertex with the largest
// remaining demand (ties by index) from the highest-demand others. The
// Erdos-Gallai check runs first so failures are reported by index instead of
// surfacing as a stuck greedy.
inline Graph graph_from_degree_sequence(const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        if (degrees[static_cast<std::size_t>(i)] < 0 || degrees[static_cast<std::size_t>(i)] > n - 1)
            throw construction_error("degree " + std::to_string(degrees[static_cast<std::size_t>(i)]) +
                                     " at position " + std::to_string(i) + " is outside [0, n-1]");
        sum += degrees[static_cast<std::size_t>(i)];
    }
    if (sum % 2 != 0) throw construction_error("degree sum is odd, sequence is not graphical");
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += sorted[static_cast<std::size_t>(k - 1)];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(sorted[static_cast<std::size_t>(i)], k);
        if (prefix > rhs)
            throw construction_error("degree sequence fails the Erdos-Gallai inequality at k=" +
                                     std::to_string(k));
    }
    Graph g(n);
    if (n == 0) return g;
    std::vector<int> rem = degrees;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (;;) {
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return rem[static_cast<std::size_t>(x)] > rem[static_cast<std::size_t>(y)];
        });
        const int v = order[0];
        if (rem[static_cast<std::size_t>(v)] == 0) break;
        int need = rem[static_cast<std::size_t>(v)];
        for (std::size_t i = 1; i < order.size() && need > 0; ++i) {
            const int w = order[i];
            if (g.has_edge(v, w)) continue;
            if (rem[static_cast<std::size_t>(w)] == 0)
                throw construction_error("degree sequence realization stuck at vertex " +
                                         std::to_string(v));
            g.add_edge(v, w);
            --rem[static_cast<std::size_t>(w)];
            --need;
        }
        rem[static_cast<std::size_t>(v)] = 0;
        if (need > 0)
            throw construction_error("degree sequence realization stuck at vertex " +
                                     std::to_string(v));
    }
    return g;
}

namespace detail {

// 2-regular bipartite graph between two equal sides (size >= 2): complete
// 2x2 blocks, closing with one 6-cycle 3x3 block when the size is odd.
inline void two_regular_bipartite(Graph& g, const std::vector<int>& vs, const std::vector<int>& us) {
    const std::size_t m = vs.size();
    std::size_t i = 0;
    while (m - i >= 2) {
        if (m - i == 3) {
            g.add_edge(vs[i], us[i]);
            g.add_edge(vs[i], us[i + 1]);
            g.add_edge(vs[i + 1], us[i]);
            g.add_edge(vs[i + 1], us[i + 2]);
            g.add_edge(vs[i + 2], us[i + 1]);
            g.add_edge(vs[i + 2], us[i + 2]);
            i += 3;
        } else {
            g.add_edge(vs[i], us[i]);
            g.add_edge(vs[i], us[i + 1]);
            g.add_edge(vs[i + 1], us[i]);
            g.add_edge(vs[i + 1], us[i + 1]);
            i += 2;
        }
    }
}

// Overlays a realization of `degrees` onto g across the given vertices.
inline void overlay_degree_sequence(Graph& g, const std::vector<int>& verts,
                                    const std::vector<int>& degrees) {
    const Graph h = graph_from_degree_sequence(degrees);
    for (auto [x, y] : h.edges())
        g.add_edge(verts[static_cast<std::size_t>(x)], verts[static_cast<std::size_t>(y)]);
}

}  // namespace detail

// Connected S_{3,b}-free graph on 2b+1 vertices beating b(2b+1)/2 edges.
// Labels: v_0 = 0, v_i = i for 1 <= i <= b+1, u_j = (b+1)+j for 1 <= j <= b-1.
//   v_0, v_b, v_{b+1} are adjacent to every other v (degree b+1);
//   the u's form K_{b-1} and attach 2-regularly to v_1..v_{b-1};
//   an inner graph on v_1..v_{b-1} of degree b-5 (one b-6 when b is even)
//   tops the low v's up to degree b.
inline Graph build_h2(int b) {
    if (b < 11) throw domain_error("build_h2 requires b >= 11, got b=" + std::to_string(b));
    const int n = 2 * b + 1;
    Graph g(n);
    for (int i = 1; i <= b + 1; ++i) g.add_edge(0, i);
    g.add_edge(b, b + 1);
    for (int i = 1; i <= b - 1; ++i) {
        g.add_edge(b, i);
        g.add_edge(b + 1, i);
    }
    std::vector<int> us, vs;
    for (int j = 1; j <= b - 1; ++j) us.push_back(b + 1 + j);
    for (int u = 0; u < b - 1; ++u)
        for (int v = u + 1; v < b - 1; ++v)
            g.add_edge(us[static_cast<std::size_t>(u)], us[static_cast<std::size_t>(v)]);
    for (int i = 1; i <= b - 1; ++i) vs.push_back(i);
    detail::two_regular_bipartite(g, vs, us);
    std::vector<int> inner(static_cast<std::size_t>(b - 1), b - 5);
    if (b % 2 == 0) inner.back() = b - 6;
    detail::overlay_degree_sequence(g, vs, inner);
    return g;
}

// Connected S_{3,b}-free graph on 2b+2 vertices. Labels as in build_h2 with
// u_j = (b+1)+j for 1 <= j <= b.  With s = b/2 (floored):
//   v_0 and v_{s+1}..v_{b+1} are adjacent to every other v (degree b+1);
//   the u's form K_b; low vertex v_i attaches to u_{2i-1}, u_{2i};
//   an inner graph on v_1..v_s of degree s-4 (one s-5 when s is odd).
inline Graph build_h3(int b) {
    if (b < 11) throw domain_error("build_h3 requires b >= 11, got b=" + std::to_string(b));
    const int n = 2 * b + 2;
    const int s = b / 2;
    Graph g(n);
    for (int i = 1; i <= b + 1; ++i) g.add_edge(0, i);
    for (int i = s + 1; i <= b + 1; ++i)
        for (int j = 1; j <= b + 1; ++j)
            if (j != i && !g.has_edge(i, j)) g.add_edge(i, j);
    std::vector<int> us;
    for (int j = 1; j <= b; ++j) us.push_back(b + 1 + j);
    for (int u = 0; u < b; ++u)
        for (int v = u + 1; v < b; ++v)
            g.add_edge(us[static_cast<std::size_t>(u)], us[static_cast<std::size_t>(v)]);
    for (int i = 1; i <= s; ++i) {
        g.add_edge(i, us[static_cast<std::size_t>(2 * i - 2)]);
        g.add_edge(i, us[static_cast<std::size_t>(2 * i - 1)]);
    }
    std::vector<int> vs;
    for (int i = 1; i <= s; ++i) vs.push_back(i);
    std::vector<int> inner(static_cast<std::size_t>(s), s - 4);
    if (s % 2 == 1) inner.back() = s - 5;
    detail::overlay_degree_sequence(g, vs, inner);
    return g;
}

// Derived shape parameters of the general tail construction for S_{a,b},
// a >= 3, at remainder q: k = b-a-q counts how far q sits below b-a, the
// u-side has b-k-1 vertices each taking k+2 attachment edges, and the low
// v-side spreads those (k+2)(b-k-1) edges as s-1 vertices of attachment
// degree a-1 plus one of degree r.
struct HGeneralParams {
    int k = 0;
    int s = 0;
    int r = 0;
};

inline HGeneralParams h_general_params(int a, int b, int q) {
    if (a < 3) throw domain_error("h_general_params requires a >= 3, got a=" + std::to_string(a));
    if (b <= a) throw domain_error("h_general_params requires b > a");
    if (q < 0) throw domain_error("h_general_params requires q >= 0");
    if (q < b - 2 * a + 3 || q > b - a + 1)
        throw domain_error("h_general_params requires b-2a+3 <= q <= b-a+1, got q=" +
                           std::to_string(q));
    const int k = b - a - q;
    const long long total = static_cast<long long>(k + 2) * (b - k - 1);
    const int s = static_cast<int>((total + a - 2) / (a - 1));
    const int r = static_cast<int>(total - static_cast<long long>(s - 1) * (a - 1));
    return {k, s, r};
}

// General-a analogue of build_h2/build_h3 on n = a+b+1+q vertices. Labels:
// v_0 = 0, v_i = i for 1 <= i <= b+1, u_j = (b+1)+j for 1 <= j <= b-k-1.
// Throws domain_error when the parameter window is violated and
// construction_error when the inner degree sequence is not graphical.
inline Graph build_h_general(int a, int b, int q) {
    const HGeneralParams hp = h_general_params(a, b, q);
    const int k = hp.k, s = hp.s, r = hp.r;
    if (s < a + 2)
        throw domain_error("build_h_general needs s >= a+2 so inner degrees stay positive, got s=" +
                           std::to_string(s) + " a=" + std::to_string(a));
    if (s > b + 1)
        throw domain_error("build_h_general needs s <= b+1, got s=" + std::to_string(s));
    const int m = b - k - 1;  // u-side size
    const int n = a + b + 1 + q;
    Graph g(n);
    for (int i = 1; i <= b + 1; ++i) g.add_edge(0, i);
    for (int i = s + 1; i <= b + 1; ++i)
        for (int j = 1; j <= b + 1; ++j)
            if (j != i && !g.has_edge(i, j)) g.add_edge(i, j);
    std::vector<int> us;
    for (int j = 1; j <= m; ++j) us.push_back(b + 1 + j);
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            g.add_edge(us[static_cast<std::size_t>(x)], us[static_cast<std::size_t>(y)]);
    // round-robin attachment: consecutive u slots cyclically, so each u ends
    // at exactly k+2 (block length a-1 <= m keeps blocks duplicate-free)
    int pos = 0;
    for (int i = 1; i <= s; ++i) {
        const int d = (i < s) ? a - 1 : r;
        for (int t = 0; t < d; ++t) {
            g.add_edge(i, us[static_cast<std::size_t>(pos % m)]);
            ++pos;
        }
    }
    // inner graph on v_1..v_s: s-1 vertices of degree s-a-1 and a last degree
    // of s-2-r or s-3-r, whichever parity admits (the larger wins when both
    // would).
    std::vector<int> inner(static_cast<std::size_t>(s - 1), s - a - 1);
    const long long base = static_cast<long long>(s - 1) * (s - a - 1);
    int ds = -1;
    for (const int cand : {s - 2 - r, s - 3 - r}) {
        if (cand >= 0 && cand <= s - 1 && (base + cand) % 2 == 0) {
            ds = cand;
            break;
        }
    }
    if (ds < 0)
        throw construction_error("no feasible last inner degree: both s-2-r and s-3-r fail, s=" +
                                 std::to_string(s) + " r=" + std::to_string(r));
    inner.push_back(ds);
    std::vector<int> vs;
    for (int i = 1; i <= s; ++i) vs.push_back(i);
    detail::overlay_degree_sequence(g, vs, inner);
    return g;
}

// The edge-maximum witness for ex_dispatch's value: cliques first, then the
// regime's tail component last.
inline std::optional<Graph> extremal_graph(long long n, long long a, long long b) {
    const auto f = ex_dispatch(n, a, b);
    if (!f) return std::nullopt;
    const long long modulus = a + b + 1;
    const Decomposition& d = f->decomp;
    switch (f->regime) {
        case RegimeLabel::CliquePlusRemainder:
        case RegimeLabel::GeneralQSmall:
            return cliques_plus_remainder(d.p, modulus, d.q);
        case RegimeLabel::NearRegularTail:
            return disjoint_union(cliques_plus_remainder(d.p - 1, modulus, 0),
                                  near_regular(static_cast<int>(modulus + d.q), static_cast<int>(b)));
        case RegimeLabel::TailH2:
            return disjoint_union(cliques_plus_remainder(d.p - 1, modulus, 0),
                                  build_h2(static_cast<int>(b)));
        case RegimeLabel::TailH3:
            return disjoint_union(cliques_plus_remainder(d.p - 1, modulus, 0),
                                  build_h3(static_cast<int>(b)));
        case RegimeLabel::OutOfTheoremRange:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace dsturan
