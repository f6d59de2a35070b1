#include <doctest.h>

#include <vector>

#include "dichi/generate.hpp"
#include "dichi/oracle.hpp"

using namespace dichi;

namespace {

OrientedGraph c3() { return build_graph(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}); }
OrientedGraph c4() { return build_graph(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
OrientedGraph tt3() { return build_graph(3, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}}); }

// Every map into k colors, for tiny graphs.
bool colorable(const OrientedGraph& g, std::size_t k) {
    if (k == 0) return g.order() == 0;
    std::vector<Color> c(g.order(), 0);
    while (true) {
        if (check_color_map(g, c).valid) return true;
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == k) c[i++] = 0;
        if (i == c.size()) return false;
    }
}

}  // namespace

TEST_CASE("exact examples") {
    CHECK(exact_dichromatic_number(tt3()).exact_value == 1);
    CHECK(exact_dichromatic_number(c3()).exact_value == 2);
    CHECK(exact_dichromatic_number(c4()).exact_value == 2);
    CHECK(exact_dichromatic_number(OrientedGraph::build(0, {})).exact_value == 0);
}

TEST_CASE("exact value matches enumeration and validates") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const OrientedGraph g = random_oriented(3 + seed % 5, 0.6, seed);
        const OracleReport r = exact_dichromatic_number(g);
        CHECK(validate_dicoloring(g, r.witness).valid);
        CHECK(r.witness.colors_used == r.exact_value);
        if (r.exact_value > 0) CHECK_FALSE(colorable(g, r.exact_value - 1));
    }
}

TEST_CASE("exact value is reversal-invariant and 1 exactly on acyclic graphs") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const OrientedGraph g = random_oriented(9, 0.4, seed);
        const std::size_t a = exact_dichromatic_number(g).exact_value;
        CHECK(a == exact_dichromatic_number(g.reversed()).exact_value);
        VertexSet all(g.order());
        for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
        CHECK((a == 1) == induced_is_acyclic(g, all).acyclic);
    }
}

TEST_CASE("node limit") {
    CHECK_THROWS_AS(exact_dichromatic_number(random_tournament(12, 3), 5), BudgetExceeded);
}

TEST_CASE("brute-force closed tournament examples") {
    const ClosedTournament a = brute_force_closed_tournament(c3());
    CHECK(a.k == VertexSet{0, 1, 2});
    CHECK(a.p.empty());
    // {0, 2, 3} is a directed triangle, so no path is needed.
    const ClosedTournament b =
        brute_force_closed_tournament(build_graph(4, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(b.k == VertexSet{0, 2, 3});
    CHECK(b.p.empty());
    const ClosedTournament c =
        brute_force_closed_tournament(build_graph(5, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    CHECK(c.k == VertexSet{0, 1, 2});
    CHECK(c.p.vertices == std::vector<Vertex>{2, 3, 4, 0});
    CHECK(brute_force_closed_tournament(c4()).path_length() == 4);
}

TEST_CASE("independent scan examples") {
    for (PatternId h : kAllPatterns) CHECK(independent_pattern_scan(c4(), h));
    CHECK_FALSE(independent_pattern_scan(build_graph(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}}),
                                         PatternId::P4Forward));
}
