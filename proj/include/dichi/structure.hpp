#ifndef DICHI_STRUCTURE_HPP
#define DICHI_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichi/graph.hpp"
#include "dichi/patterns.hpp"

namespace dichi {

/// A maximum tournament K together with a directed path P from the sink SCC
/// of g[K] to its source SCC, so that C = K + V(P) induces a strongly
/// connected subgraph. P is empty when g[K] is already strongly connected.
struct ClosedTournament {
    VertexSet k;
    DirectedPath p;
    VertexSet c;

    std::size_t path_length() const noexcept { return p.size(); }
};

class NotStronglyConnected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ClosedTournamentOptions {
    // Upper bound on the number of maximum tournaments examined; 0 = none.
    std::size_t tournament_cap = 0;
};

/// Minimizes |P| over every maximum tournament and every admissible path.
/// Ties: first K in lexicographic order, then the lexicographically smallest
/// shortest path. Requires g strongly connected with clique number >= 2.
ClosedTournament path_minimizing_closed_tournament(const OrientedGraph& g,
                                                   const ClosedTournamentOptions& opts = {});

/// Checks every ClosedTournament invariant; returns a reason on failure.
std::optional<std::string> check_closed_tournament(const OrientedGraph& g, const ClosedTournament& ct);

struct DipolarSet {
    VertexSet s_plus;   // no out-neighbor outside s_plus + s_minus
    VertexSet s_minus;  // no in-neighbor outside s_plus + s_minus

    VertexSet members() const { return set_union(s_plus, s_minus); }
};

/// The pieces of N[C + X]: X strong neighbors of C, Z = N(C) - X,
/// Y = N(X) - N[C].
struct DipolarParts {
    VertexSet c;
    VertexSet x;
    VertexSet z;
    VertexSet y;
};

struct DipolarConstruction {
    DipolarSet set;
    DipolarParts parts;
};

/// A vertex of Z + Y with both an in- and an out-neighbor outside S. Only
/// possible when g contains the pattern; the induced copy is attached.
class NotDipolar : public std::runtime_error {
public:
    NotDipolar(Vertex v, PatternWitness w)
        : std::runtime_error("vertex " + std::to_string(v) +
                             " has arcs both into and out of the dipolar candidate; induced " + describe(w)),
          vertex_(v), witness_(w) {}
    Vertex vertex() const noexcept { return vertex_; }
    const PatternWitness& witness() const noexcept { return witness_; }

private:
    Vertex vertex_;
    PatternWitness witness_;
};

/// S = N[C + X] with the witness partition: vertices with an out-neighbor
/// outside S go to s_minus, everything else to s_plus.
DipolarConstruction build_dipolar_set(const OrientedGraph& g, const ClosedTournament& ct, PatternId h);

struct DipolarCheck {
    bool ok = true;
    std::optional<Vertex> vertex;
    std::optional<Arc> arc;
    std::string reason;
};

DipolarCheck verify_dipolar(const OrientedGraph& g, const DipolarSet& d);

/// Partitions of N(P) by first and last attachment on P, refined by arc
/// direction. Index i here is path position i (0-based), i.e. p_{i+1}.
/// "plus" = in-neighbors of p_i (arc v -> p_i), "minus" = out-neighbors.
struct AttachmentPartitions {
    VertexSet neighborhood;  // N(P)
    std::vector<VertexSet> first, first_plus, first_minus;
    std::vector<VertexSet> last, last_plus, last_minus;
    std::vector<std::size_t> first_index;  // per vertex of g, npos outside N(P)
    std::vector<std::size_t> last_index;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

AttachmentPartitions attachment_partitions(const OrientedGraph& g, const DirectedPath& p);

struct WRSets {
    VertexSet w;
    VertexSet r;
};

/// case P4Forward: W = union over interior i of (F_i^- + L_i^+),
///                 R = N(P) - (N({p1, p2, pl}) + W).
/// case A4:        W = union over interior i of (F_i^+ + L_i^-),
///                 R = N(P) - (N({p1, pl}) + W).
/// Interior means path positions 2..l-1 (1-based). Requires l >= 3.
WRSets w_r_sets(const OrientedGraph& g, const DirectedPath& p, const AttachmentPartitions& parts, PatternId which);

}  // namespace dichi

#endif
