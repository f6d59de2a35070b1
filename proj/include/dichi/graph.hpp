#ifndef DICHI_GRAPH_HPP
#define DICHI_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichi/vertex_set.hpp"

namespace dichi {

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    auto operator<=>(const Arc&) const = default;
};

class GraphError : public std::runtime_error {
public:
    enum class Kind { SelfLoop, Digon, OutOfRange };

    GraphError(Kind kind, Arc arc, std::string what)
        : std::runtime_error(std::move(what)), kind_(kind), arc_(arc) {}

    Kind kind() const noexcept { return kind_; }
    // For a digon this is the arc that closed it; the opposite arc is
    // {arc.head, arc.tail}.
    Arc arc() const noexcept { return arc_; }

private:
    Kind kind_;
    Arc arc_;
};

/// Simple digon-free digraph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency is kept both as sorted lists and
/// as a dense n*n relation table, so `has_arc` and `adjacent` are O(1).
class OrientedGraph {
public:
    OrientedGraph() = default;

    /// Duplicate arcs are collapsed. Throws GraphError on a self-loop, a
    /// digon, or an endpoint outside 0..n-1.
    static OrientedGraph build(std::size_t n, std::span<const Arc> arcs);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool has_arc(Vertex u, Vertex v) const noexcept { return rel_[u * n_ + v] == kOut; }
    bool adjacent(Vertex u, Vertex v) const noexcept { return rel_[u * n_ + v] != kNone; }

    const VertexSet& out_neighbors(Vertex v) const { return out_[v]; }
    const VertexSet& in_neighbors(Vertex v) const { return in_[v]; }
    const VertexSet& neighbors(Vertex v) const { return nbr_[v]; }

    /// Same vertex set, every arc reversed.
    OrientedGraph reversed() const;

    bool operator==(const OrientedGraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    static constexpr std::uint8_t kNone = 0;
    static constexpr std::uint8_t kOut = 1;
    static constexpr std::uint8_t kIn = 2;

    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::uint8_t> rel_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::vector<VertexSet> nbr_;
};

inline OrientedGraph build_graph(std::size_t n, std::span<const Arc> arcs) {
    return OrientedGraph::build(n, arcs);
}

/// g[s], relabelled to 0..|s|-1 in increasing order of the original ids.
struct InducedSubgraph {
    OrientedGraph graph;
    VertexSet to_parent;  // local id -> id in the parent graph
};

InducedSubgraph induced_subgraph(const OrientedGraph& g, const VertexSet& s);

struct DirectedPath {
    std::vector<Vertex> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    bool empty() const noexcept { return vertices.empty(); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    Vertex operator[](std::size_t i) const { return vertices[i]; }
    VertexSet vertex_set() const { return make_set(vertices); }
    bool operator==(const DirectedPath&) const = default;
};

/// Distinct vertices with an arc between each consecutive pair.
bool is_directed_path(const OrientedGraph& g, const DirectedPath& p);

struct SccDecomposition {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Components in a topological order of the condensation: every arc
    // between two components goes from the lower index to the higher one.
    std::vector<VertexSet> components;
    // Vertex -> component index, npos for vertices outside the scope.
    std::vector<std::size_t> component_of;

    std::size_t count() const noexcept { return components.size(); }
    bool strongly_connected() const noexcept { return components.size() == 1; }
};

SccDecomposition scc(const OrientedGraph& g);
/// SCCs of g[within]; component_of is indexed by the ids of g.
SccDecomposition scc(const OrientedGraph& g, const VertexSet& within);

bool is_strongly_connected(const OrientedGraph& g);
bool is_strongly_connected(const OrientedGraph& g, const VertexSet& within);

struct AcyclicityResult {
    bool acyclic = true;
    // Set when acyclic: a topological order of g[s] (smallest ready vertex first).
    std::vector<Vertex> topological_order;
    // Set when cyclic: v0, v1, ..., vk with arcs v_i -> v_{i+1} and vk -> v0.
    std::vector<Vertex> cycle;
};

AcyclicityResult induced_is_acyclic(const OrientedGraph& g, const VertexSet& s);

/// Minimum-vertex-count directed path from some vertex of `sources` to some
/// vertex of `targets`; among those, the lexicographically smallest vertex
/// sequence. Vertices in `forbidden_interior` may still be endpoints.
std::optional<DirectedPath> shortest_directed_path(const OrientedGraph& g,
                                                   const VertexSet& sources,
                                                   const VertexSet& targets,
                                                   const VertexSet& forbidden_interior = {});

/// No arc (p_i, p_j) with j > i + 1. Backward chords are allowed.
bool is_forward_induced(const OrientedGraph& g, const DirectedPath& p);

/// closed == false: N(s) = (union of N(v), v in s) minus s.
/// closed == true:  N[s] = union of N[v], v in s.
VertexSet neighborhood(const OrientedGraph& g, const VertexSet& s, bool closed);

}  // namespace dichi

#endif
