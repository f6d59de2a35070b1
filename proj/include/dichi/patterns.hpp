#ifndef DICHI_PATTERNS_HPP
#define DICHI_PATTERNS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dichi/graph.hpp"

namespace dichi {

/// The four orientations of P4 up to reading the path from the other end.
/// Canonical arc directions along a-b-c-d:
///   P4Forward  a->b, b->c, c->d   (-> -> ->)
///   A4         b->a, b->c, d->c   (<- -> <-)
///   Q4         a->b, c->b, d->c   (-> <- <-)
///   Q4Prime    b->a, c->b, c->d   (<- <- ->)
enum class PatternId { P4Forward, A4, Q4, Q4Prime };

inline constexpr std::array<PatternId, 4> kAllPatterns = {PatternId::P4Forward, PatternId::A4,
                                                          PatternId::Q4, PatternId::Q4Prime};

std::string_view to_string(PatternId h);
/// Accepts p4, a4, q4, q4p / q4prime / q4' (case-insensitive).
std::optional<PatternId> parse_pattern(std::string_view s);

/// The pattern obtained by reversing every arc (Q4 <-> Q4Prime; the other two map to themselves).
PatternId arc_reversal(PatternId h);

using Quad = std::array<Vertex, 4>;

/// Ordered quadruple (a,b,c,d) inducing the path a-b-c-d with the pattern's
/// canonical orientation.
struct PatternWitness {
    PatternId pattern = PatternId::P4Forward;
    Quad vertices{};
    bool operator==(const PatternWitness&) const = default;
};

std::string describe(const PatternWitness& w);

/// True iff {a,b,c,d} induces exactly the three arcs of h's canonical form.
bool realizes(const OrientedGraph& g, PatternId h, const Quad& q);

/// If the induced path q (in either reading direction) realizes h, returns
/// the quadruple in canonical reading order.
std::optional<Quad> orient_as(const OrientedGraph& g, PatternId h, const Quad& q);

/// First witness in scan order a < d, then (a, b, c, d) lexicographic over
/// induced underlying paths a-b-c-d; both readings of each path are tried.
std::optional<PatternWitness> find_pattern(const OrientedGraph& g, PatternId h);

inline bool is_free_of(const OrientedGraph& g, PatternId h) { return !find_pattern(g, h); }

class EnumerationCapExceeded : public std::runtime_error {
public:
    explicit EnumerationCapExceeded(std::size_t cap)
        : std::runtime_error("maximum-tournament enumeration exceeded cap " + std::to_string(cap)),
          cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

struct MaximumTournaments {
    std::size_t omega = 0;
    std::vector<VertexSet> tournaments;  // lexicographic order, each exactly once
};

/// Clique number of the underlying graph (of g[within]).
std::size_t clique_number(const OrientedGraph& g);
std::size_t clique_number(const OrientedGraph& g, const VertexSet& within);

/// All maximum cliques of the underlying graph; in an oriented graph these
/// are exactly the maximum tournaments. cap == 0 means unbounded; otherwise
/// more than `cap` tournaments throws EnumerationCapExceeded.
MaximumTournaments maximum_tournaments(const OrientedGraph& g, std::size_t cap = 0);

/// Vertices of N(a) with both an in-neighbor and an out-neighbor in a.
VertexSet strong_neighborhood(const OrientedGraph& g, const VertexSet& a);

}  // namespace dichi

#endif
