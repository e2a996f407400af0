#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dsturan/canonical.hpp"
#include "dsturan/construct.hpp"
#include "dsturan/double_star.hpp"
#include "dsturan/errors.hpp"
#include "dsturan/formulas.hpp"
#include "dsturan/graph.hpp"

namespace dsturan {

struct SearchConfig {
    bool degree_cap_enabled = true;  // cap degrees at a+b during the search
    bool warm_start = true;          // seed the incumbent from extremal_graph
    bool enumerate_all = false;      // collect every optimal isomorphism class
    long long node_limit = -1;       // <= 0 means unlimited
    long long time_limit_ms = -1;    // <= 0 means unlimited
    int threads = 1;
};

struct SearchResult {
    long long value = 0;
    std::vector<CanonicalForm> witnesses;
    long long nodes_explored = 0;
    bool proven_optimal = true;
};

namespace detail {

struct SharedSearch {
    std::atomic<long long> best{-1};
    std::atomic<long long> nodes{0};
    std::atomic<bool> stop{false};
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    long long node_limit = -1;
};

// Depth-first maximization over the pairs (0,1),(0,2),(1,2),(0,3),... with
// include tried before exclude. Adjacency fits one word per vertex (n <= 64).
class EdgeSearch {
public:
    EdgeSearch(int n, DoubleStarPattern pat, const SearchConfig& cfg, SharedSearch* shared)
        : n_(n), pat_(pat), cfg_(cfg), shared_(shared) {
        cap_ = n - 1;
        if (cfg.degree_cap_enabled) cap_ = std::min(cap_, pat.a + pat.b);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) pairs_.emplace_back(u, v);
        adj_.assign(static_cast<std::size_t>(n), 0);
        deg_.assign(static_cast<std::size_t>(n), 0);
        undecided_.assign(static_cast<std::size_t>(n), n - 1);
        cur_ = 0;
    }

    // Applies forced decisions for pair indices [0, prefix.size()). Returns
    // false when an include is infeasible, meaning the subtree is empty.
    bool apply_prefix(const std::vector<bool>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            auto [u, v] = pairs_[i];
            --undecided_[static_cast<std::size_t>(u)];
            --undecided_[static_cast<std::size_t>(v)];
            if (!prefix[i]) continue;
            if (!include_allowed(u, v)) return false;
            add(u, v);
            if (creates_host(u, v)) return false;
        }
        start_ = static_cast<int>(prefix.size());
        return true;
    }

    void run() { rec(start_); }

    long long local_best() const { return best_local_; }
    const std::vector<std::uint64_t>& best_adj() const { return best_adj_; }
    bool found_leaf() const { return found_leaf_; }
    std::set<CanonicalForm>& pool() { return pool_; }

private:
    bool include_allowed(int u, int v) const {
        if (deg_[static_cast<std::size_t>(u)] >= cap_ || deg_[static_cast<std::size_t>(v)] >= cap_)
            return false;
        // vertices unseen by 0 are interchangeable, so 0's neighborhood can
        // be assumed to be a prefix of 1..n-1
        if (u == 0 && v >= 2 && ((adj_[0] >> (v - 1)) & 1u) == 0) return false;
        return true;
    }

    void add(int u, int v) {
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        ++deg_[static_cast<std::size_t>(u)];
        ++deg_[static_cast<std::size_t>(v)];
        ++cur_;
    }

    void remove(int u, int v) {
        adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
        --deg_[static_cast<std::size_t>(u)];
        --deg_[static_cast<std::size_t>(v)];
        --cur_;
    }

    bool hosts(int u, int v) const {
        const int du = deg_[static_cast<std::size_t>(u)] - 1;
        const int dv = deg_[static_cast<std::size_t>(v)] - 1;
        if (du + dv -
                std::popcount(adj_[static_cast<std::size_t>(u)] & adj_[static_cast<std::size_t>(v)]) <
            pat_.a + pat_.b)
            return false;
        return (du >= pat_.a && dv >= pat_.b) || (du >= pat_.b && dv >= pat_.a);
    }

    // Adding uv only changes degrees of u,v and the neighborhoods N(u),N(v),
    // so fresh hosts can only sit on edges incident to u or v.
    bool creates_host(int u, int v) {
        if (hosts(u, v)) return true;
        for (int side = 0; side < 2; ++side) {
            const int x = side == 0 ? u : v;
            const int other = side == 0 ? v : u;
            std::uint64_t nb = adj_[static_cast<std::size_t>(x)] & ~(std::uint64_t{1} << other);
            while (nb) {
                const int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (hosts(x, w)) return true;
            }
        }
        return false;
    }

    long long upper_bound() const {
        long long slack = 0;
        for (int v = 0; v < n_; ++v)
            slack += std::min(cap_ - deg_[static_cast<std::size_t>(v)],
                              undecided_[static_cast<std::size_t>(v)]);
        return cur_ + slack / 2;
    }

    bool should_stop() {
        if (shared_->stop.load(std::memory_order_relaxed)) return true;
        if ((++tick_ & 1023) == 0) {
            if (shared_->has_deadline && std::chrono::steady_clock::now() >= shared_->deadline) {
                shared_->stop.store(true, std::memory_order_relaxed);
                return true;
            }
        }
        if (shared_->node_limit > 0 &&
            shared_->nodes.load(std::memory_order_relaxed) >= shared_->node_limit) {
            shared_->stop.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    void leaf() {
        if (cfg_.enumerate_all) {  // enumerate runs single-threaded
            const long long inc = shared_->best.load(std::memory_order_relaxed);
            if (cur_ < inc) return;
            if (cur_ > inc) {
                shared_->best.store(cur_, std::memory_order_relaxed);
                pool_.clear();
            }
            pool_.insert(canonical_form(snapshot()));
            return;
        }
        long long seen = shared_->best.load(std::memory_order_relaxed);
        while (cur_ > seen &&
               !shared_->best.compare_exchange_weak(seen, cur_, std::memory_order_relaxed)) {
        }
        if (cur_ > best_local_) {
            best_local_ = cur_;
            best_adj_ = adj_;
            found_leaf_ = true;
        }
    }

    void rec(int idx) {
        if (should_stop()) return;
        shared_->nodes.fetch_add(1, std::memory_order_relaxed);
        const long long inc = shared_->best.load(std::memory_order_relaxed);
        const long long ub = upper_bound();
        if (cfg_.enumerate_all ? ub < inc : ub <= inc) return;
        if (idx == static_cast<int>(pairs_.size())) {
            leaf();
            return;
        }
        auto [u, v] = pairs_[static_cast<std::size_t>(idx)];
        --undecided_[static_cast<std::size_t>(u)];
        --undecided_[static_cast<std::size_t>(v)];
        if (include_allowed(u, v)) {
            add(u, v);
            if (!creates_host(u, v)) rec(idx + 1);
            remove(u, v);
        }
        rec(idx + 1);
        ++undecided_[static_cast<std::size_t>(u)];
        ++undecided_[static_cast<std::size_t>(v)];
    }

    Graph snapshot() const {
        Graph g(n_);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t nb = adj_[static_cast<std::size_t>(v)] >> (v + 1) << (v + 1);
            while (nb) {
                const int w = std::countr_zero(nb);
                nb &= nb - 1;
                g.add_edge(v, w);
            }
        }
        return g;
    }

    int n_;
    DoubleStarPattern pat_;
    SearchConfig cfg_;
    SharedSearch* shared_;
    int cap_ = 0;
    int start_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> deg_;
    std::vector<int> undecided_;
    long long cur_ = 0;
    long long best_local_ = -1;
    std::vector<std::uint64_t> best_adj_;
    bool found_leaf_ = false;
    std::set<CanonicalForm> pool_;
    unsigned tick_ = 0;

public:
    Graph best_graph() const {
        Graph g(n_);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t nb = best_adj_[static_cast<std::size_t>(v)] >> (v + 1) << (v + 1);
            while (nb) {
                const int w = std::countr_zero(nb);
                nb &= nb - 1;
                g.add_edge(v, w);
            }
        }
        return g;
    }
};

inline std::optional<Graph> warm_start_graph(int n, const DoubleStarPattern& pat) {
    if (pat.a >= pat.b) return std::nullopt;
    auto g = extremal_graph(n, pat.a, pat.b);
    if (!g) return std::nullopt;
    if (contains_double_star(*g, pat)) return std::nullopt;  // never trust, always verify
    return g;
}

}  // namespace detail

// Exact maximum edge count over S_{a,b}-free graphs on n labeled vertices.
// When the node or time limit trips, value is the best found so far and
// proven_optimal is false. Witnesses carry canonical forms only for n <= 16.
inline SearchResult max_edges_free(int n, int a, int b, const SearchConfig& cfg = {}) {
    const DoubleStarPattern pat(a, b);
    if (pat.a > pat.b) throw std::invalid_argument("max_edges_free requires a <= b");
    if (n < 0) throw std::invalid_argument("max_edges_free requires n >= 0");
    if (n > 64) throw unsupported_size("edge search supports at most 64 vertices");
    SearchResult res;
    if (n <= 1) {
        res.value = 0;
        res.witnesses.push_back(CanonicalForm{n, {}});
        res.proven_optimal = true;
        return res;
    }

    detail::SharedSearch shared;
    shared.node_limit = cfg.node_limit;
    if (cfg.time_limit_ms > 0) {
        shared.has_deadline = true;
        shared.deadline =
            std::chrono::steady_clock::now() + std::chrono::milliseconds(cfg.time_limit_ms);
    }

    // seeding the incumbent is sound in enumerate mode too: pruning is strict
    // there, so every tie still reaches a leaf
    std::optional<Graph> warm;
    if (cfg.warm_start) {
        warm = detail::warm_start_graph(n, pat);
        if (warm) shared.best.store(warm->edge_count(), std::memory_order_relaxed);
    }

    const int pair_count = n * (n - 1) / 2;
    std::vector<detail::EdgeSearch> workers;
    const int split_levels = (cfg.threads > 1 && pair_count >= 4 && !cfg.enumerate_all) ? 3 : 0;
    if (split_levels == 0) {
        workers.emplace_back(n, pat, cfg, &shared);
        if (!workers[0].apply_prefix({})) {
            throw std::logic_error("empty prefix cannot fail");
        }
        workers[0].run();
    } else {
        std::vector<std::vector<bool>> prefixes;
        for (unsigned mask = 0; mask < (1u << split_levels); ++mask) {
            std::vector<bool> p(static_cast<std::size_t>(split_levels));
            // high bit first, so include-first subtrees come first
            for (int i = 0; i < split_levels; ++i)
                p[static_cast<std::size_t>(i)] = ((mask >> (split_levels - 1 - i)) & 1u) == 0;
            prefixes.push_back(std::move(p));
        }
        workers.reserve(prefixes.size());
        for (std::size_t i = 0; i < prefixes.size(); ++i) workers.emplace_back(n, pat, cfg, &shared);
        std::atomic<std::size_t> next{0};
        auto body = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= prefixes.size()) return;
                if (workers[i].apply_prefix(prefixes[i])) workers[i].run();
            }
        };
        std::vector<std::thread> ts;
        const int nthreads = std::min<int>(cfg.threads, static_cast<int>(prefixes.size()));
        for (int t = 0; t < nthreads; ++t) ts.emplace_back(body);
        for (auto& t : ts) t.join();
    }

    res.nodes_explored = shared.nodes.load();
    res.proven_optimal = !shared.stop.load();
    long long best = shared.best.load();

    if (cfg.enumerate_all) {
        if (n > 16)
            throw unsupported_size("enumerating optimal classes needs canonical forms (n <= 16)");
        std::set<CanonicalForm> merged;
        for (auto& w : workers)
            for (const auto& c : w.pool())
                if (graph_from_canonical(c).edge_count() == best) merged.insert(c);
        res.value = best;
        res.witnesses.assign(merged.begin(), merged.end());
        return res;
    }

    res.value = std::max<long long>(best, 0);
    if (n <= 16) {
        std::optional<CanonicalForm> pick;
        if (warm && warm->edge_count() == res.value) pick = canonical_form(*warm);
        for (auto& w : workers) {
            if (!w.found_leaf() || w.local_best() != res.value) continue;
            CanonicalForm c = canonical_form(w.best_graph());
            if (!pick || c < *pick) pick = c;
        }
        if (pick) res.witnesses.push_back(*pick);
    }
    return res;
}

// Every isomorphism class attaining the S_{a,b}-free edge maximum, as
// canonical forms. The degree cap stays off here: it preserves the optimal
// value but can hide optimal classes of larger maximum degree (K_{1,3} ties
// K_3 + K_1 for a=b=1 yet exceeds the cap), and this function promises all
// of them.
inline SearchResult enumerate_extremal(int n, int a, int b, SearchConfig cfg = {}) {
    if (n > 16) throw unsupported_size("enumerating optimal classes needs canonical forms (n <= 16)");
    cfg.enumerate_all = true;
    cfg.degree_cap_enabled = false;
    cfg.threads = 1;
    return max_edges_free(n, a, b, cfg);
}

// Independent cross-check: scan all graphs on n <= 7 vertices in descending
// edge count and report the first S_{a,b}-free one, using the split-counting
// detector rather than the deficiency test.
inline long long brute_force_max_edges(int n, int a, int b) {
    const DoubleStarPattern pat(a, b);
    if (n < 0) throw std::invalid_argument("brute_force_max_edges requires n >= 0");
    if (n > 7) throw unsupported_size("brute force scan supports at most 7 vertices");
    if (n <= 1) return 0;
    const int P = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    for (int k = P; k >= 1; --k) {
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << P;
        while (mask < limit) {
            Graph g(n);
            for (int i = 0; i < P; ++i)
                if ((mask >> i) & 1u) g.add_edge(pairs[static_cast<std::size_t>(i)].first,
                                                 pairs[static_cast<std::size_t>(i)].second);
            if (!brute_force_contains(g, pat)) return k;
            const std::uint64_t lo = mask & (~mask + 1);
            const std::uint64_t lz = mask + lo;
            mask = lz | (((mask ^ lz) / lo) >> 2);
        }
    }
    return 0;
}

// Number of k-cliques via candidate intersection, vertices taken ascending.
inline long long count_cliques(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("count_cliques requires k >= 1");
    if (g.n() == 0) return 0;
    if (k == 1) return g.n();
    const int words = static_cast<int>(g.words());
    long long total = 0;
    auto rec = [&](auto&& self, const std::vector<std::uint64_t>& cs, int depth, int last) -> void {
        for (int w = (last + 1) / 64; w < words; ++w) {
            std::uint64_t bits = cs[static_cast<std::size_t>(w)];
            if (w == (last + 1) / 64) bits &= ~std::uint64_t{0} << ((last + 1) % 64);
            while (bits) {
                const int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (depth + 1 == k) {
                    ++total;
                    continue;
                }
                std::vector<std::uint64_t> nxt(static_cast<std::size_t>(words));
                bool any = false;
                for (int x = 0; x < words; ++x) {
                    nxt[static_cast<std::size_t>(x)] =
                        cs[static_cast<std::size_t>(x)] & g.row(v)[static_cast<std::size_t>(x)];
                    any |= nxt[static_cast<std::size_t>(x)] != 0;
                }
                if (any) self(self, nxt, depth + 1, v);
            }
        }
    };
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(words), ~std::uint64_t{0});
    if (g.n() % 64 != 0) cand.back() = (std::uint64_t{1} << (g.n() % 64)) - 1;
    rec(rec, cand, 0, -1);
    return total;
}

// Exact maximum number of k-cliques over S_{a,b}-free graphs on n vertices.
// Adding edges never destroys cliques, so only edge-maximal free graphs need
// visiting; they are enumerated by depth-first assignment with no degree cap
// (a cap preserves the edge optimum but not necessarily the clique optimum).
inline long long max_cliques_free(int n, int a, int b, int k) {
    const DoubleStarPattern pat(a, b);
    if (pat.a > pat.b) throw std::invalid_argument("max_cliques_free requires a <= b");
    if (k < 3) throw domain_error("max_cliques_free requires k >= 3");
    if (n < 0) throw std::invalid_argument("max_cliques_free requires n >= 0");
    if (n > 8) throw unsupported_size("clique maximization supports at most 8 vertices");
    if (n <= a + b + 1) return binom(n, k);  // the complete graph is already free
    const int P = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    auto hosts = [&](int u, int v) {
        const int du = deg[static_cast<std::size_t>(u)] - 1;
        const int dv = deg[static_cast<std::size_t>(v)] - 1;
        if (du + dv - std::popcount(adj[static_cast<std::size_t>(u)] &
                                    adj[static_cast<std::size_t>(v)]) <
            a + b)
            return false;
        return (du >= a && dv >= b) || (du >= b && dv >= a);
    };
    auto add = [&](int u, int v) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    };
    auto remove = [&](int u, int v) {
        adj[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        adj[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
        --deg[static_cast<std::size_t>(u)];
        --deg[static_cast<std::size_t>(v)];
    };
    auto creates_host = [&](int u, int v) {
        if (hosts(u, v)) return true;
        for (int side = 0; side < 2; ++side) {
            const int x = side == 0 ? u : v;
            const int other = side == 0 ? v : u;
            std::uint64_t nb = adj[static_cast<std::size_t>(x)] & ~(std::uint64_t{1} << other);
            while (nb) {
                const int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (hosts(x, w)) return true;
            }
        }
        return false;
    };
    long long best = 0;
    auto leaf = [&]() {
        // edge-maximality: every absent pair must be blocked
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                if ((adj[static_cast<std::size_t>(u)] >> v) & 1u) continue;
                add(u, v);
                const bool blocked = creates_host(u, v);
                remove(u, v);
                if (!blocked) return;
            }
        Graph g(n);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if ((adj[static_cast<std::size_t>(u)] >> v) & 1u) g.add_edge(u, v);
        best = std::max(best, count_cliques(g, k));
    };
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == P) {
            leaf();
            return;
        }
        auto [u, v] = pairs[static_cast<std::size_t>(idx)];
        bool can = true;
        if (u == 0 && v >= 2 && ((adj[0] >> (v - 1)) & 1u) == 0) can = false;
        if (can) {
            add(u, v);
            if (!creates_host(u, v)) self(self, idx + 1);
            remove(u, v);
        }
        self(self, idx + 1);
    };
    rec(rec, 0);
    return best;
}

}  // namespace dsturan
