#ifndef DICHI_GENERATE_HPP
#define DICHI_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichi/graph.hpp"
#include "dichi/patterns.hpp"

// Seeded instance generators. Identical parameters and seed give an
// identical arc set.

namespace dichi {

class MaxTriesExceeded : public std::runtime_error {
public:
    explicit MaxTriesExceeded(std::size_t tries)
        : std::runtime_error("no pattern-free instance after " + std::to_string(tries) + " tries"), tries_(tries) {}
    std::size_t tries() const noexcept { return tries_; }

private:
    std::size_t tries_;
};

/// Each unordered pair with probability p, oriented by a fair coin.
OrientedGraph random_oriented(std::size_t n, double p, std::uint64_t seed);
OrientedGraph random_tournament(std::size_t n, std::uint64_t seed);
/// Arcs (i, j) for all i < j.
OrientedGraph transitive_tournament(std::size_t n);
/// 0 -> 1 -> ... -> n-1 -> 0.
OrientedGraph directed_cycle(std::size_t n);

/// Path 0 -> 1 -> ... -> n-1 plus each backward chord j -> i (j > i+1) with
/// probability q. Feeds long minimal paths to the p4 case, which random
/// growth almost never reaches.
OrientedGraph chorded_path(std::size_t n, double q, std::uint64_t seed);

/// Draws base(seed_i) for derived seeds until one is h-free.
OrientedGraph hfree_rejection(const std::function<OrientedGraph(std::uint64_t)>& base, PatternId h,
                              std::size_t max_tries, std::uint64_t seed);

struct GreedyParams {
    std::size_t n = 0;
    double p = 0.3;             // chance that a pair is offered at all
    std::size_t max_omega = 0;  // 0 = no cap
    std::size_t cycle = 0;      // seed the graph with a directed cycle on this many vertices (0 = none)
};

/// Offers pairs in random order with a random orientation and keeps an arc
/// only if the graph stays h-free and within the clique cap. Scales to a few
/// hundred vertices where rejection sampling never succeeds.
OrientedGraph hfree_greedy(const GreedyParams& params, PatternId h, std::uint64_t seed);

/// Replaces every vertex v of `outer` by a copy of parts[v]; arcs between
/// copies follow the arc between their outer vertices. H-freeness for any
/// orientation of P4 is preserved because P4 has no nontrivial module.
OrientedGraph substitute(const OrientedGraph& outer, const std::vector<OrientedGraph>& parts);

}  // namespace dichi

#endif
