#ifndef DICHI_ORACLE_HPP
#define DICHI_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "dichi/dicoloring.hpp"
#include "dichi/graph.hpp"
#include "dichi/patterns.hpp"
#include "dichi/structure.hpp"

// Brute-force ground truth for desk-scale instances. Nothing here shares
// code paths with the engine beyond the graph type itself.

namespace dichi {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t nodes)
        : std::runtime_error("exact search exceeded its node limit after " + std::to_string(nodes) + " nodes"),
          nodes_(nodes) {}
    std::size_t nodes() const noexcept { return nodes_; }

private:
    std::size_t nodes_;
};

struct OracleReport {
    std::size_t exact_value = 0;
    Dicoloring witness;
    std::size_t nodes_explored = 0;
};

/// Smallest k admitting a dicoloring. Iterative deepening on k, backtracking
/// with vertex 0 fixed to color 0 and colors opened in increasing order.
/// Throws BudgetExceeded once `limit` search nodes have been spent.
OracleReport exact_dichromatic_number(const OrientedGraph& g, std::optional<std::size_t> limit = std::nullopt);

/// Exhaustive closed-tournament search over every maximum clique (subset
/// scan) and every simple sink-to-source path; same tie-break as the
/// structure module. Intended for n <= 9.
ClosedTournament brute_force_closed_tournament(const OrientedGraph& g);

/// True iff g has no induced copy of h; all 4-subsets times all 24 orders,
/// compared arc by arc against an explicit arc table.
bool independent_pattern_scan(const OrientedGraph& g, PatternId h);

}  // namespace dichi

#endif
