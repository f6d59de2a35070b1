#include <doctest.h>

#include <vector>

#include "dichi/generate.hpp"

using namespace dichi;

TEST_CASE("fixed families") {
    const OrientedGraph t = transitive_tournament(4);
    CHECK(t.size() == 6);
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = i + 1; j < 4; ++j) CHECK(t.has_arc(i, j));
    const OrientedGraph c = directed_cycle(5);
    CHECK(c.size() == 5);
    CHECK(c.has_arc(4, 0));
    CHECK(random_tournament(7, 1).size() == 21);
}

TEST_CASE("determinism") {
    CHECK(random_oriented(20, 0.3, 5) == random_oriented(20, 0.3, 5));
    CHECK_FALSE(random_oriented(20, 0.3, 5) == random_oriented(20, 0.3, 6));
    CHECK(hfree_greedy({25, 0.4, 3, 6}, PatternId::A4, 9) == hfree_greedy({25, 0.4, 3, 6}, PatternId::A4, 9));
    CHECK(chorded_path(9, 0.5, 4) == chorded_path(9, 0.5, 4));
}

TEST_CASE("rejection sampling") {
    const OrientedGraph g =
        hfree_rejection([](std::uint64_t s) { return random_oriented(10, 0.3, s); }, PatternId::Q4, 1000, 7);
    CHECK(is_free_of(g, PatternId::Q4));
    CHECK_THROWS_AS(
        hfree_rejection([](std::uint64_t) { return build_graph(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}}); },
                        PatternId::P4Forward, 5, 1),
        MaxTriesExceeded);
}

TEST_CASE("greedy growth respects the pattern and the clique cap") {
    for (PatternId h : kAllPatterns) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const OrientedGraph g = hfree_greedy({30, 0.5, 3, seed % 2 ? 10u : 0u}, h, seed);
            CHECK(is_free_of(g, h));
            CHECK(clique_number(g) <= 3);
        }
    }
}

TEST_CASE("substitution keeps pattern-freeness") {
    for (PatternId h : kAllPatterns) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const OrientedGraph outer = hfree_greedy({6, 0.6, 0, 6}, h, seed);
            std::vector<OrientedGraph> parts;
            for (std::uint64_t v = 0; v < 6; ++v) parts.push_back(hfree_greedy({1 + v % 4, 0.6, 0, 0}, h, seed + v));
            const OrientedGraph g = substitute(outer, parts);
            CHECK(g.order() == 1 + 2 + 3 + 4 + 1 + 2);
            CHECK(is_free_of(g, h));
        }
    }
}

TEST_CASE("chorded paths") {
    const OrientedGraph g = chorded_path(8, 0.0, 1);
    CHECK(g.size() == 7);
    const OrientedGraph full = chorded_path(5, 1.0, 1);
    CHECK(full.has_arc(4, 0));
    CHECK(full.has_arc(0, 1));
    CHECK(full.size() == 10);
}
