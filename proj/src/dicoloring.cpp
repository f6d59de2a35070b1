#include "dichi/dicoloring.hpp"

#include <algorithm>

namespace dichi {

std::vector<Color> compact_colors(const std::vector<Color>& color_of) {
    std::vector<Color> used = color_of;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<Color> out(color_of.size());
    for (std::size_t v = 0; v < color_of.size(); ++v) {
        out[v] = static_cast<Color>(std::lower_bound(used.begin(), used.end(), color_of[v]) - used.begin());
    }
    return out;
}

namespace {

std::vector<VertexSet> classes_of(const std::vector<Color>& color_of, std::size_t k) {
    std::vector<VertexSet> classes(k);
    for (std::size_t v = 0; v < color_of.size(); ++v) classes[color_of[v]].push_back(static_cast<Vertex>(v));
    return classes;
}

}  // namespace

ColoringCheck check_color_map(const OrientedGraph& g, const std::vector<Color>& color_of) {
    ColoringCheck res;
    if (color_of.size() != g.order()) {
        res.valid = false;
        res.reason = "color map covers " + std::to_string(color_of.size()) + " vertices, graph has " +
                     std::to_string(g.order());
        return res;
    }
    const auto dense = compact_colors(color_of);
    const std::size_t k = dense.empty() ? 0 : *std::max_element(dense.begin(), dense.end()) + 1;
    const auto classes = classes_of(dense, k);
    for (std::size_t c = 0; c < k; ++c) {
        auto acyc = induced_is_acyclic(g, classes[c]);
        if (!acyc.acyclic) {
            res.valid = false;
            res.color = color_of[classes[c].front()];
            res.cycle = std::move(acyc.cycle);
            res.reason = "color " + std::to_string(*res.color) + " contains a directed cycle";
            return res;
        }
    }
    return res;
}

Dicoloring make_dicoloring(const OrientedGraph& g, const std::vector<Color>& color_of) {
    auto check = check_color_map(g, color_of);
    if (!check.valid) throw InvalidColoring(std::move(check));
    Dicoloring d;
    d.color_of = compact_colors(color_of);
    d.colors_used = d.color_of.empty() ? 0 : *std::max_element(d.color_of.begin(), d.color_of.end()) + 1;
    for (const VertexSet& cls : classes_of(d.color_of, d.colors_used)) {
        d.certificate.push_back(induced_is_acyclic(g, cls).topological_order);
    }
    return d;
}

ColoringCheck validate_dicoloring(const OrientedGraph& g, const Dicoloring& d) {
    ColoringCheck res;
    auto fail = [&](std::string why) {
        res.valid = false;
        res.reason = std::move(why);
        return res;
    };
    const std::size_t n = g.order();
    if (d.color_of.size() != n) return fail("color map size differs from the vertex count");
    if (d.certificate.size() != d.colors_used) return fail("certificate row count differs from colors_used");

    std::vector<std::size_t> position(n, 0);
    std::vector<char> seen(n, 0);
    for (Color c = 0; c < d.colors_used; ++c) {
        const auto& row = d.certificate[c];
        if (row.empty()) {
            res.color = c;
            return fail("color " + std::to_string(c) + " is unused");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Vertex v = row[i];
            if (v >= n || seen[v] || d.color_of[v] != c) {
                res.color = c;
                return fail("certificate row " + std::to_string(c) + " is not a permutation of its class");
            }
            seen[v] = 1;
            position[v] = i;
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v]) return fail("vertex " + std::to_string(v) + " is missing from the certificate");
    }
    for (const Arc& a : g.arcs()) {
        if (d.color_of[a.tail] == d.color_of[a.head] && position[a.tail] > position[a.head]) {
            // Recover an actual cycle for the report.
            res.color = d.color_of[a.tail];
            VertexSet cls;
            for (Vertex v = 0; v < n; ++v) {
                if (d.color_of[v] == *res.color) cls.push_back(v);
            }
            res.cycle = induced_is_acyclic(g, cls).cycle;
            return fail("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                        ") points backward in the order of color " + std::to_string(*res.color));
        }
    }
    if (d.claimed_bound > 0 && BigInt(d.colors_used) > d.claimed_bound) {
        return fail("colors_used exceeds the claimed bound");
    }
    return res;
}

}  // namespace dichi
