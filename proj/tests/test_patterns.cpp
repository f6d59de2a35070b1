#include <doctest.h>

#include <vector>

#include "dichi/generate.hpp"
#include "dichi/oracle.hpp"
#include "dichi/patterns.hpp"

using namespace dichi;

namespace {

OrientedGraph c3() { return build_graph(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}); }
OrientedGraph c4() { return build_graph(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
OrientedGraph tt3_plus() { return build_graph(4, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 0}}); }

// Canonical pattern on 0-1-2-3.
OrientedGraph pattern_graph(PatternId h) {
    switch (h) {
    case PatternId::P4Forward: return build_graph(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}});
    case PatternId::A4: return build_graph(4, std::vector<Arc>{{1, 0}, {1, 2}, {3, 2}});
    case PatternId::Q4: return build_graph(4, std::vector<Arc>{{0, 1}, {2, 1}, {3, 2}});
    case PatternId::Q4Prime: return build_graph(4, std::vector<Arc>{{1, 0}, {2, 1}, {2, 3}});
    }
    return {};
}

std::size_t brute_clique(const OrientedGraph& g) {
    std::size_t best = 0;
    for (std::uint32_t m = 0; m < (1u << g.order()); ++m) {
        bool ok = true;
        for (Vertex i = 0; i < g.order() && ok; ++i)
            for (Vertex j = i + 1; j < g.order() && ok; ++j)
                if ((m >> i & 1) && (m >> j & 1) && !g.adjacent(i, j)) ok = false;
        if (ok) best = std::max<std::size_t>(best, __builtin_popcount(m));
    }
    return best;
}

}  // namespace

TEST_CASE("pattern names") {
    for (PatternId h : kAllPatterns) CHECK(parse_pattern(to_string(h)) == h);
    CHECK(parse_pattern("Q4'") == PatternId::Q4Prime);
    CHECK(parse_pattern("q4prime") == PatternId::Q4Prime);
    CHECK_FALSE(parse_pattern("p5"));
    CHECK(arc_reversal(PatternId::Q4) == PatternId::Q4Prime);
    CHECK(arc_reversal(PatternId::A4) == PatternId::A4);
}

TEST_CASE("find_pattern examples") {
    const auto w = find_pattern(pattern_graph(PatternId::P4Forward), PatternId::P4Forward);
    REQUIRE(w);
    CHECK(w->vertices == Quad{0, 1, 2, 3});
    for (PatternId h : kAllPatterns) {
        CHECK(is_free_of(c4(), h));
        CHECK_FALSE(is_free_of(pattern_graph(h), h));
    }
}

TEST_CASE("each pattern graph carries only its own pattern") {
    for (PatternId h : kAllPatterns)
        for (PatternId other : kAllPatterns) CHECK(is_free_of(pattern_graph(h), other) == (h != other));
}

TEST_CASE("find_pattern agrees with the independent scan; witnesses realize") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const OrientedGraph g = random_oriented(8, 0.1 + 0.05 * (seed % 8), seed);
        for (PatternId h : kAllPatterns) {
            const auto w = find_pattern(g, h);
            CHECK(!w == independent_pattern_scan(g, h));
            if (w) CHECK(realizes(g, h, w->vertices));
        }
    }
}

TEST_CASE("q4 in g is q4p in the reverse") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const OrientedGraph g = random_oriented(7, 0.4, seed);
        CHECK(is_free_of(g, PatternId::Q4) == is_free_of(g.reversed(), PatternId::Q4Prime));
        CHECK(is_free_of(g, PatternId::A4) == is_free_of(g.reversed(), PatternId::A4));
        CHECK(is_free_of(g, PatternId::P4Forward) == is_free_of(g.reversed(), PatternId::P4Forward));
    }
}

TEST_CASE("maximum_tournaments examples") {
    const auto a = maximum_tournaments(c3());
    CHECK(a.omega == 3);
    CHECK(a.tournaments == std::vector<VertexSet>{{0, 1, 2}});
    const auto b = maximum_tournaments(c4());
    CHECK(b.omega == 2);
    CHECK(b.tournaments == std::vector<VertexSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    const auto c = maximum_tournaments(tt3_plus());
    CHECK(c.omega == 3);
    // Both {0,1,2} and the directed triangle {0,2,3}.
    CHECK(c.tournaments == std::vector<VertexSet>{{0, 1, 2}, {0, 2, 3}});
    CHECK_THROWS_AS(maximum_tournaments(c4(), 3), EnumerationCapExceeded);
}

TEST_CASE("clique number matches a subset scan") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const OrientedGraph g = random_oriented(3 + seed % 9, 0.5, seed);
        const std::size_t w = brute_clique(g);
        CHECK(clique_number(g) == w);
        const auto mt = maximum_tournaments(g);
        CHECK(mt.omega == w);
        for (const auto& k : mt.tournaments) CHECK(k.size() == w);
    }
}

TEST_CASE("strong_neighborhood") {
    CHECK(strong_neighborhood(tt3_plus(), {0, 1, 2}) == VertexSet{3});
    CHECK(strong_neighborhood(c4(), {0}).empty());
    const OrientedGraph pend = build_graph(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CHECK(strong_neighborhood(pend, {0, 1, 2}).empty());
    CHECK(c3().order() == 3);
}

TEST_CASE("strong neighborhood is inside the open neighborhood") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const OrientedGraph g = random_oriented(10, 0.4, seed);
        const VertexSet a{0, 1, 2};
        const VertexSet x = strong_neighborhood(g, a);
        CHECK(is_subset(x, neighborhood(g, a, false)));
        for (Vertex v : x) {
            bool in = false, out = false;
            for (Vertex u : a) {
                in = in || g.has_arc(u, v);
                out = out || g.has_arc(v, u);
            }
            CHECK((in && out));
        }
    }
}
