#ifndef DICHI_DICOLORING_HPP
#define DICHI_DICOLORING_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichi/binding.hpp"
#include "dichi/graph.hpp"

namespace dichi {

using Color = std::size_t;

/// A vertex partition into acyclic classes. certificate[c] lists color class
/// c in a topological order of g[class]; claimed_bound is 0 when no bound
/// is attached.
struct Dicoloring {
    std::vector<Color> color_of;
    std::size_t colors_used = 0;
    std::vector<std::vector<Vertex>> certificate;
    BigInt claimed_bound = 0;
};

struct ColoringCheck {
    bool valid = true;
    std::optional<Color> color;  // offending class, if any
    std::vector<Vertex> cycle;   // monochromatic directed cycle, if any
    std::string reason;
};

class InvalidColoring : public std::runtime_error {
public:
    explicit InvalidColoring(ColoringCheck check)
        : std::runtime_error(check.reason), check_(std::move(check)) {}
    const ColoringCheck& check() const noexcept { return check_; }

private:
    ColoringCheck check_;
};

/// Relabels colors densely, keeping their relative order.
std::vector<Color> compact_colors(const std::vector<Color>& color_of);

/// Checks a raw color map: every class acyclic (cycle reported otherwise).
ColoringCheck check_color_map(const OrientedGraph& g, const std::vector<Color>& color_of);

/// Compacts, checks and attaches the per-class topological orders. Throws
/// InvalidColoring when some class contains a directed cycle.
Dicoloring make_dicoloring(const OrientedGraph& g, const std::vector<Color>& color_of);

/// Validates a Dicoloring from its certificate alone: colors dense and all
/// used, each certificate row a permutation of its class, every arc inside
/// a class pointing forward in that row, and colors_used <= claimed_bound
/// when a bound is attached.
ColoringCheck validate_dicoloring(const OrientedGraph& g, const Dicoloring& d);

}  // namespace dichi

#endif
