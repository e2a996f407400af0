#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "dsturan/construct.hpp"
#include "dsturan/double_star.hpp"
#include "dsturan/graph.hpp"

using namespace dsturan;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// A witness must be an actual embedding: distinct vertices, centers adjacent,
// each leaf adjacent to its center, no leaf equal to a center.
void check_witness(const Graph& g, const DoubleStarPattern& p, const DoubleStarWitness& w) {
    REQUIRE(g.has_edge(w.center_a, w.center_b));
    REQUIRE(static_cast<int>(w.leaves_a.size()) == p.a);
    REQUIRE(static_cast<int>(w.leaves_b.size()) == p.b);
    std::vector<int> all{w.center_a, w.center_b};
    all.insert(all.end(), w.leaves_a.begin(), w.leaves_a.end());
    all.insert(all.end(), w.leaves_b.begin(), w.leaves_b.end());
    std::sort(all.begin(), all.end());
    REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (int x : w.leaves_a) REQUIRE(g.has_edge(w.center_a, x));
    for (int x : w.leaves_b) REQUIRE(g.has_edge(w.center_b, x));
}

}  // namespace

TEST_CASE("edge_hosts on cliques") {
    const Graph k9 = complete_graph(9);
    const Graph k8 = complete_graph(8);
    const DoubleStarPattern p(3, 4);
    // K_9 edge: 8+8-7 = 9 >= 7 distinct leaves available
    CHECK(edge_hosts(k9, 0, 1, p));
    // K_8 edge: 7+7-6 = 6 < 7, so K_8 = K_{a+b+1} is free
    CHECK_FALSE(edge_hosts(k8, 0, 1, p));
    CHECK_THROWS_AS(edge_hosts(k8, 0, 0, p), std::invalid_argument);
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(edge_hosts(g, 0, 2, p), std::invalid_argument);
}

TEST_CASE("cycle C_6 hosts S_{1,1} but not S_{1,2}") {
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK(contains_double_star(c6, {1, 1}).has_value());
    CHECK_FALSE(contains_double_star(c6, {1, 2}).has_value());
}

TEST_CASE("near-regular extremal graphs are free") {
    // 4-regular on 9 vertices attains the S_{1,4} maximum
    const Graph g = near_regular(9, 4);
    CHECK_FALSE(contains_double_star(g, {1, 4}).has_value());
    CHECK(contains_double_star(g, {1, 3}).has_value());
}

TEST_CASE("degree gate: max degree <= a means no double star") {
    Graph m(8);  // perfect matching, max degree 1
    for (int i = 0; i < 8; i += 2) m.add_edge(i, i + 1);
    CHECK_FALSE(contains_double_star(m, {1, 1}).has_value());
}

TEST_CASE("returned witnesses embed correctly") {
    std::mt19937 rng(555);
    int found = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 8);
        const Graph g = random_graph(rng, n, 0.5);
        const int a = 1 + static_cast<int>(rng() % 3);
        const int b = a + static_cast<int>(rng() % 3);
        const DoubleStarPattern p(a, b);
        if (const auto w = contains_double_star(g, p)) {
            check_witness(g, p, *w);
            ++found;
        }
    }
    CHECK(found > 50);  // the sweep must actually exercise witnesses
}

TEST_CASE("detector is deterministic") {
    std::mt19937 rng(556);
    const Graph g = random_graph(rng, 10, 0.5);
    const auto w1 = contains_double_star(g, {2, 3});
    const auto w2 = contains_double_star(g, {2, 3});
    REQUIRE(w1.has_value() == w2.has_value());
    if (w1) {
        CHECK(w1->center_a == w2->center_a);
        CHECK(w1->center_b == w2->center_b);
        CHECK(w1->leaves_a == w2->leaves_a);
        CHECK(w1->leaves_b == w2->leaves_b);
    }
}

TEST_CASE("detector agrees with brute force on random graphs") {
    std::mt19937 rng(557);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const double dens = 0.15 + 0.7 * (static_cast<double>(rng() % 100) / 100.0);
        const Graph g = random_graph(rng, n, dens);
        const int a = 1 + static_cast<int>(rng() % 3);
        const int b = a + static_cast<int>(rng() % 4);
        const DoubleStarPattern p(a, b);
        CHECK(contains_double_star(g, p).has_value() == brute_force_contains(g, p));
    }
}

TEST_CASE("containment is symmetric in the pattern") {
    std::mt19937 rng(558);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(rng, 9, 0.5);
        const int a = 1 + static_cast<int>(rng() % 3);
        const int b = 1 + static_cast<int>(rng() % 4);
        CHECK(contains_double_star(g, {a, b}).has_value() ==
              contains_double_star(g, {b, a}).has_value());
    }
}

TEST_CASE("containment is monotone under adding edges") {
    std::mt19937 rng(559);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, 8, 0.4);
        const DoubleStarPattern p(1, 2);
        if (!contains_double_star(g, p)) continue;
        // add any missing edge; the copy of S_{1,2} must survive
        bool added = false;
        for (int u = 0; u < 8 && !added; ++u)
            for (int v = u + 1; v < 8 && !added; ++v)
                if (!g.has_edge(u, v)) {
                    g.add_edge(u, v);
                    added = true;
                }
        CHECK(contains_double_star(g, p).has_value());
    }
}

TEST_CASE("pattern and size guards") {
    CHECK_THROWS_AS(DoubleStarPattern(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(DoubleStarPattern(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_contains(complete_graph(15), {1, 2}), unsupported_size);
}
