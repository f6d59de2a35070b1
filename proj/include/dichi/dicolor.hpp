#ifndef DICHI_DICOLOR_HPP
#define DICHI_DICOLOR_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichi/binding.hpp"
#include "dichi/dicoloring.hpp"
#include "dichi/graph.hpp"
#include "dichi/patterns.hpp"
#include "dichi/structure.hpp"

namespace dichi {

/// The input contains the forbidden pattern. Raised by up-front
/// verification or by a structural check that failed mid-run; either way
/// the induced copy is attached.
class NotHFree : public std::runtime_error {
public:
    NotHFree(PatternWitness w, std::string where)
        : std::runtime_error("graph is not " + std::string(to_string(w.pattern)) + "-free (" + where +
                             "): induced " + describe(w)),
          witness_(w), where_(std::move(where)) {}
    const PatternWitness& witness() const noexcept { return witness_; }
    const std::string& where() const noexcept { return where_; }

    /// The same error with witness vertices translated through to_parent.
    NotHFree remapped(const std::vector<Vertex>& to_parent) const;

private:
    PatternWitness witness_;
    std::string where_;
};

/// A vertex of s with an in- and an out-neighbor in s - N(r).
class QrsClassificationFailure : public NotHFree {
public:
    QrsClassificationFailure(Vertex v, PatternWitness w) : NotHFree(w, "qrs classification"), vertex_(v) {}
    Vertex vertex() const noexcept { return vertex_; }

private:
    Vertex vertex_;
};

struct Slot {
    std::size_t palette = 0;
    Color color = 0;
    auto operator<=>(const Slot&) const = default;
};

/// Colors as (palette, color) pairs over a subset of the vertices. Distinct
/// palettes never share a color.
class PartialColoring {
public:
    explicit PartialColoring(std::size_t n) : slot_(n) {}

    void assign(Vertex v, Slot s) { slot_[v] = s; }
    /// group[i] gets (palette, colors[i]).
    void assign_group(const VertexSet& group, const std::vector<Color>& colors, std::size_t palette);
    bool colored(Vertex v) const { return slot_[v].has_value(); }
    const std::optional<Slot>& at(Vertex v) const { return slot_[v]; }
    VertexSet domain() const;
    std::size_t palette_usage(std::size_t palette) const;
    std::size_t distinct() const;
    /// Dense colors for `over` (position-indexed), slots ranked
    /// lexicographically. Every vertex of `over` must be colored.
    std::vector<Color> flatten(const VertexSet& over) const;

private:
    std::vector<std::optional<Slot>> slot_;
};

/// Dense dicoloring of g[subset], indexed by position in subset. The engine
/// passes itself here; only subsets of clique number < omega are requested.
using Recurse = std::function<std::vector<Color>(const VertexSet&)>;

/// Color usage of one dipolar set, by stage.
struct StageAccount {
    std::size_t depth = 0;  // recursion depth of the peel
    std::size_t omega = 0;
    std::size_t path_length = 0;
    PatternId pattern = PatternId::Q4;
    BigInt gamma = 0;
    std::size_t nk_palettes = 0;
    std::size_t nk_colors = 0;
    std::size_t path_colors = 0;
    std::size_t path_nbhd_colors = 0;
    std::size_t y_colors = 0;
    std::size_t total_colors = 0;
    std::size_t max_palette = 0;  // largest single-palette usage among the gamma palettes
};

/// Returns the first violated stage budget, if any.
std::optional<std::string> check_stage_budgets(const StageAccount& a);

struct DicolorTrace {
    std::vector<StageAccount> stages;
    std::size_t peels = 0;
    std::size_t omega = 0;
    // Path length of the first closed tournament at the top level.
    std::optional<std::size_t> path_length;
};

struct DicolorOptions {
    static constexpr std::size_t kVerifyLimit = 400;
    // Unset: verify h-freeness up front iff n <= kVerifyLimit.
    std::optional<bool> verify;
    std::size_t tournament_cap = 0;
};

/// Colors s (<= 2 gamma colors) using palettes base and base + 1.
/// Requires: no arc between q and s, every vertex of r has an in- and an
/// out-neighbor in q, every vertex of s has a neighbor in r.
PartialColoring color_qrs(const OrientedGraph& g, const VertexSet& q, const VertexSet& r, const VertexSet& s,
                          PatternId h, const Recurse& recurse, std::size_t palette_base = 0);

/// Colors N(P) - N[K] with palettes base, base + 1, ... (at most 5).
PartialColoring color_path_neighborhood(const OrientedGraph& g, const ClosedTournament& ct, PatternId h,
                                        const Recurse& recurse, std::size_t palette_base = 0);

struct DipolarColoring {
    PartialColoring coloring;
    StageAccount account;
};

/// Colors the whole dipolar set in four stages (N[K], V(P), N(P), Y).
/// h must be Q4, P4Forward or A4.
DipolarColoring color_dipolar_set(const OrientedGraph& g, const ClosedTournament& ct,
                                  const DipolarConstruction& d, PatternId h, const Recurse& recurse);

/// Peels dipolar sets off a strongly connected h-free graph; S+ colors go to
/// palette A, S- colors to palette B, the remainder reuses both.
std::vector<Color> peel_and_combine(const OrientedGraph& g, PatternId h, const DicolorOptions& opts = {},
                                    DicolorTrace* trace = nullptr);

/// Dicoloring with at most f_c(omega) colors. Q4Prime runs the Q4 engine on
/// the reversed graph and keeps its color map.
Dicoloring dicolor_forbidding(const OrientedGraph& g, PatternId h, const DicolorOptions& opts = {},
                              DicolorTrace* trace = nullptr);

}  // namespace dichi

#endif
