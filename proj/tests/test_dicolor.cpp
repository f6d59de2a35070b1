#include <doctest.h>

#include <vector>

#include "dichi/dicolor.hpp"
#include "dichi/generate.hpp"
#include "dichi/oracle.hpp"

using namespace dichi;

namespace {

OrientedGraph c3() { return build_graph(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}); }
OrientedGraph c4() { return build_graph(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
OrientedGraph tt3() { return build_graph(3, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}}); }
// TT3 closed by the path 2 -> 3 -> 4 -> 0.
OrientedGraph tt3_path() {
    return build_graph(5, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// Exact coloring of the requested subgraph; fine at unit-test scale.
Recurse exact_recurse(const OrientedGraph& g) {
    return [&g](const VertexSet& s) {
        if (s.empty()) return std::vector<Color>{};
        const auto sub = induced_subgraph(g, s);
        return exact_dichromatic_number(sub.graph).witness.color_of;
    };
}

bool valid_on(const OrientedGraph& g, const PartialColoring& pc, const VertexSet& over) {
    const auto colors = pc.flatten(over);
    const auto sub = induced_subgraph(g, over);
    return check_color_map(sub.graph, colors).valid;
}

}  // namespace

TEST_CASE("dicoloring certificates") {
    const Dicoloring d = make_dicoloring(c3(), {0, 0, 1});
    CHECK(d.colors_used == 2);
    CHECK(validate_dicoloring(c3(), d).valid);
    CHECK_THROWS_AS(make_dicoloring(c3(), {0, 0, 0}), InvalidColoring);
    const ColoringCheck bad = check_color_map(c3(), {5, 5, 5});
    CHECK_FALSE(bad.valid);
    CHECK(bad.cycle.size() == 3);
    CHECK(compact_colors({7, 2, 7, 9}) == std::vector<Color>{1, 0, 1, 2});

    Dicoloring tampered = d;
    std::swap(tampered.certificate[0][0], tampered.certificate[0][1]);
    CHECK_FALSE(validate_dicoloring(c3(), tampered).valid);
    Dicoloring over = d;
    over.claimed_bound = 1;
    CHECK_FALSE(validate_dicoloring(c3(), over).valid);
}

TEST_CASE("dicolor examples") {
    for (PatternId h : kAllPatterns) {
        CHECK(dicolor_forbidding(tt3(), h).colors_used == 1);
        const Dicoloring d = dicolor_forbidding(c3(), h);
        CHECK(d.colors_used == 2);
        CHECK(validate_dicoloring(c3(), d).valid);
    }
    const Dicoloring d = dicolor_forbidding(c4(), PatternId::P4Forward);
    CHECK(validate_dicoloring(c4(), d).valid);
    CHECK(BigInt(d.colors_used) <= binding_function(6, 2));
    CHECK(exact_dichromatic_number(c4()).exact_value == 2);
    CHECK(dicolor_forbidding(OrientedGraph::build(0, {}), PatternId::Q4).colors_used == 0);
}

TEST_CASE("dicolor rejects graphs with the pattern") {
    const OrientedGraph p4 = build_graph(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}});
    try {
        dicolor_forbidding(p4, PatternId::P4Forward);
        FAIL("accepted");
    } catch (const NotHFree& e) {
        CHECK(e.witness().vertices == Quad{0, 1, 2, 3});
    }
}

// Without up-front verification the runtime assertions must still either
// produce a valid coloring or report a real induced copy.
TEST_CASE("unverified runs never return an invalid coloring") {
    std::size_t caught = 0;
    for (PatternId h : kAllPatterns) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const OrientedGraph g = random_oriented(14, 0.35, seed);
            DicolorOptions opts;
            opts.verify = false;
            try {
                const Dicoloring d = dicolor_forbidding(g, h, opts);
                CHECK(validate_dicoloring(g, d).valid);
            } catch (const NotHFree& e) {
                ++caught;
                CHECK(realizes(g, h, e.witness().vertices));
            }
        }
    }
    CHECK(caught > 0);
}

TEST_CASE("single dipolar set: trivial stages") {
    // K strongly connected and S = V.
    const OrientedGraph g = c3();
    const ClosedTournament ct = path_minimizing_closed_tournament(g);
    const DipolarConstruction d = build_dipolar_set(g, ct, PatternId::Q4);
    const DipolarColoring dc = color_dipolar_set(g, ct, d, PatternId::Q4, exact_recurse(g));
    CHECK(dc.coloring.domain() == VertexSet{0, 1, 2});
    CHECK(valid_on(g, dc.coloring, {0, 1, 2}));
    CHECK(dc.account.path_colors == 0);
    CHECK_FALSE(check_stage_budgets(dc.account));

    const OrientedGraph h = tt3_path();
    const ClosedTournament ct2 = path_minimizing_closed_tournament(h);
    const DipolarConstruction d2 = build_dipolar_set(h, ct2, PatternId::Q4);
    const DipolarColoring dc2 = color_dipolar_set(h, ct2, d2, PatternId::Q4, exact_recurse(h));
    CHECK(ct2.path_length() == 4);
    CHECK(valid_on(h, dc2.coloring, {0, 1, 2, 3, 4}));
    CHECK_FALSE(check_stage_budgets(dc2.account));
}

TEST_CASE("color_qrs") {
    const OrientedGraph g = c3();
    const PartialColoring empty = color_qrs(g, {0}, {1}, {}, PatternId::Q4, exact_recurse(g));
    CHECK(empty.domain().empty());

    // q = {0, 1} feeding r = 2 both ways; s = {3} hangs off r.
    const OrientedGraph h = build_graph(4, std::vector<Arc>{{0, 1}, {0, 2}, {2, 1}, {2, 3}});
    const PartialColoring one = color_qrs(h, {0, 1}, {2}, {3}, PatternId::Q4, exact_recurse(h));
    REQUIRE(one.at(3));
    CHECK(one.at(3)->palette == 0);
}

TEST_CASE("color_path_neighborhood with an empty path") {
    const OrientedGraph g = c3();
    const ClosedTournament ct = path_minimizing_closed_tournament(g);
    CHECK(color_path_neighborhood(g, ct, PatternId::Q4, exact_recurse(g)).domain().empty());
    CHECK_THROWS_AS(color_path_neighborhood(g, ct, PatternId::Q4Prime, exact_recurse(g)), std::invalid_argument);
}

TEST_CASE("generated instances: certificate, bound, stage budgets, trace") {
    for (PatternId h : kAllPatterns) {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const OrientedGraph g = hfree_greedy({10 + seed % 30, 0.35, 4, seed % 3 ? 0u : 8u}, h, seed);
            DicolorTrace trace;
            const Dicoloring d = dicolor_forbidding(g, h, {}, &trace);
            CHECK(validate_dicoloring(g, d).valid);
            const std::size_t w = clique_number(g);
            CHECK(trace.omega == w);
            if (w > 0) CHECK(BigInt(d.colors_used) <= binding_function(case_constant(h), w));
            for (const auto& a : trace.stages) CHECK_FALSE(check_stage_budgets(a));
        }
    }
}

TEST_CASE("peels combine across boundaries") {
    std::size_t multi = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const OrientedGraph g = hfree_greedy({30, 0.4, 3, 30}, PatternId::A4, seed);
        if (!is_strongly_connected(g)) continue;
        DicolorTrace trace;
        const auto colors = peel_and_combine(g, PatternId::A4, {}, &trace);
        CHECK(check_color_map(g, colors).valid);
        if (trace.peels >= 2) ++multi;
    }
    CHECK(multi > 0);
}

TEST_CASE("q4p is q4 on the reverse") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const OrientedGraph g = hfree_greedy({20, 0.4, 4, 0}, PatternId::Q4Prime, seed);
        const Dicoloring a = dicolor_forbidding(g, PatternId::Q4Prime);
        const Dicoloring b = dicolor_forbidding(g.reversed(), PatternId::Q4);
        CHECK(a.color_of == b.color_of);
    }
}
