#include <doctest.h>

#include <string>

#include "dichi/generate.hpp"
#include "dichi/io.hpp"

using namespace dichi;

TEST_CASE("parse examples") {
    const OrientedGraph g = parse_graph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(g == build_graph(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}));
    try {
        parse_graph("2 2\n0 1\n1 0\n");
        FAIL("digon accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("digon") != std::string::npos);
    }
}

TEST_CASE("comments, blanks and errors") {
    CHECK(parse_graph("# c\n\n2 1\n  # x\n0 1\n").size() == 1);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 1\n1 0 \n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    try {
        parse_graph("3 1\n0 7\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    // Duplicate arcs collapse but count toward m.
    CHECK(parse_graph("2 2\n0 1\n0 1\n").size() == 1);
}

TEST_CASE("round trip") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const OrientedGraph g = random_oriented(1 + seed % 15, 0.4, seed);
        const std::string text = serialize_graph(g);
        const OrientedGraph back = parse_graph(text);
        CHECK(back == g);
        CHECK(serialize_graph(back) == text);
        CHECK(graph_digest(back) == graph_digest(g));
    }
    CHECK(graph_digest(directed_cycle(5)) != graph_digest(directed_cycle(6)));
}

TEST_CASE("coloring files") {
    const OrientedGraph c3 = directed_cycle(3);
    const Dicoloring d = make_dicoloring(c3, {0, 1, 1});
    const std::string text = serialize_coloring(d, PatternId::Q4);
    const ColoringFile f = parse_coloring(text);
    CHECK(f.n == 3);
    CHECK(f.colors == 2);
    CHECK(f.pattern == PatternId::Q4);
    CHECK(f.color_of == d.color_of);
    CHECK_THROWS_AS(parse_coloring("dicoloring 2 1 - -\n0 0\n"), ParseError);
}
