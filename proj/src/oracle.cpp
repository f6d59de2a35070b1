#include "dichi/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <utility>

namespace dichi {

namespace {

// Backtracking k-dicoloring with one topological order per class.
class ExactSearch {
public:
    ExactSearch(const OrientedGraph& g, std::size_t k, std::optional<std::size_t> limit, std::size_t& nodes)
        : g_(g), k_(k), limit_(limit), nodes_(nodes), color_(g.order(), kNone), pos_(g.order(), 0), order_(k) {}

    std::optional<std::vector<Color>> run() {
        if (assign(0, 0)) return color_;
        return std::nullopt;
    }

private:
    static constexpr Color kNone = static_cast<Color>(-1);

    bool assign(Vertex v, std::size_t opened) {
        if (v == g_.order()) return true;
        const std::size_t top = std::min(k_, opened + 1);
        for (Color c = 0; c < top; ++c) {
            if (limit_ && nodes_ >= *limit_) throw BudgetExceeded(nodes_);
            ++nodes_;
            std::vector<Vertex> saved = order_[c];
            if (!insert(v, c)) continue;
            if (assign(v + 1, std::max(opened, c + 1))) return true;
            color_[v] = kNone;
            order_[c] = std::move(saved);
            reindex(c);
        }
        return false;
    }

    void reindex(Color c) {
        for (std::size_t i = 0; i < order_[c].size(); ++i) pos_[order_[c][i]] = i;
    }

    // Adds v to class c if the class stays acyclic.
    bool insert(Vertex v, Color c) {
        auto& ord = order_[c];
        std::size_t lo = 0;                 // one past the last in-neighbor
        std::size_t hi = ord.size();        // first out-neighbor
        for (Vertex u : g_.in_neighbors(v)) {
            if (color_[u] == c) lo = std::max(lo, pos_[u] + 1);
        }
        for (Vertex w : g_.out_neighbors(v)) {
            if (color_[w] == c) hi = std::min(hi, pos_[w]);
        }
        if (lo <= hi) {
            ord.insert(ord.begin() + static_cast<std::ptrdiff_t>(lo), v);
            color_[v] = c;
            reindex(c);
            return true;
        }
        if (reaches_in_neighbor(v, c)) return false;
        color_[v] = c;
        ord.push_back(v);
        retopologize(c);
        return true;
    }

    // Is there a path inside class c from an out-neighbor of v to an
    // in-neighbor of v?
    bool reaches_in_neighbor(Vertex v, Color c) const {
        std::vector<char> seen(g_.order(), 0);
        std::vector<Vertex> stack;
        for (Vertex w : g_.out_neighbors(v)) {
            if (color_[w] == c) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            if (g_.has_arc(x, v)) return true;
            for (Vertex y : g_.out_neighbors(x)) {
                if (color_[y] == c && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return false;
    }

    void retopologize(Color c) {
        auto& ord = order_[c];
        std::vector<std::size_t> indeg(g_.order(), 0);
        for (Vertex x : ord) {
            for (Vertex y : g_.out_neighbors(x)) {
                if (color_[y] == c) ++indeg[y];
            }
        }
        std::vector<Vertex> ready, out;
        for (Vertex x : ord) {
            if (indeg[x] == 0) ready.push_back(x);
        }
        while (!ready.empty()) {
            Vertex x = ready.back();
            ready.pop_back();
            out.push_back(x);
            for (Vertex y : g_.out_neighbors(x)) {
                if (color_[y] == c && --indeg[y] == 0) ready.push_back(y);
            }
        }
        ord = std::move(out);
        reindex(c);
    }

    const OrientedGraph& g_;
    std::size_t k_;
    std::optional<std::size_t> limit_;
    std::size_t& nodes_;
    std::vector<Color> color_;
    std::vector<std::size_t> pos_;
    std::vector<std::vector<Vertex>> order_;
};

}  // namespace

OracleReport exact_dichromatic_number(const OrientedGraph& g, std::optional<std::size_t> limit) {
    OracleReport report;
    if (g.order() == 0) {
        report.witness = make_dicoloring(g, {});
        return report;
    }
    for (std::size_t k = 1; k <= g.order(); ++k) {
        ExactSearch search(g, k, limit, report.nodes_explored);
        if (auto colors = search.run()) {
            report.exact_value = k;
            report.witness = make_dicoloring(g, *colors);
            return report;
        }
    }
    throw std::logic_error("no dicoloring with n colors");  // singletons always work
}

ClosedTournament brute_force_closed_tournament(const OrientedGraph& g) {
    const std::size_t n = g.order();
    if (n > 20) throw std::invalid_argument("brute-force closed tournament is for small graphs");

    // reach[u] bitmask of vertices reachable from u within `within`.
    auto reach_within = [&](std::uint32_t within) {
        std::vector<std::uint32_t> reach(n, 0);
        for (Vertex u = 0; u < n; ++u) {
            if (!(within >> u & 1)) continue;
            std::uint32_t seen = 1u << u, frontier = 1u << u;
            while (frontier) {
                std::uint32_t next = 0;
                for (Vertex x = 0; x < n; ++x) {
                    if (!(frontier >> x & 1)) continue;
                    for (Vertex y : g.out_neighbors(x)) {
                        if ((within >> y & 1) && !(seen >> y & 1)) next |= 1u << y;
                    }
                }
                seen |= next;
                frontier = next;
            }
            reach[u] = seen;
        }
        return reach;
    };
    const std::uint32_t everything = n == 32 ? ~0u : (1u << n) - 1;
    auto strongly = [&](std::uint32_t s) {
        if (!s) return false;
        const auto reach = reach_within(s);
        for (Vertex u = 0; u < n; ++u) {
            if ((s >> u & 1) && (reach[u] & s) != s) return false;
        }
        return true;
    };
    if (!strongly(everything)) throw NotStronglyConnected("closed tournament requires a strongly connected graph");

    std::size_t omega = 0;
    std::vector<VertexSet> cliques;
    for (std::uint32_t s = 1; s <= everything; ++s) {
        VertexSet members;
        for (Vertex u = 0; u < n; ++u) {
            if (s >> u & 1) members.push_back(u);
        }
        bool clique = true;
        for (std::size_t i = 0; i < members.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < members.size() && clique; ++j) {
                clique = g.has_arc(members[i], members[j]) || g.has_arc(members[j], members[i]);
            }
        }
        if (!clique) continue;
        if (members.size() > omega) {
            omega = members.size();
            cliques.clear();
        }
        if (members.size() == omega) cliques.push_back(std::move(members));
    }
    std::sort(cliques.begin(), cliques.end());
    if (omega < 2) throw std::invalid_argument("closed tournament requires clique number >= 2");

    std::optional<ClosedTournament> best;
    for (const VertexSet& k : cliques) {
        std::uint32_t kmask = 0;
        for (Vertex u : k) kmask |= 1u << u;
        if (strongly(kmask)) return ClosedTournament{k, {}, k};

        // In a tournament the source component reaches all of K and the
        // sink component is reached from all of K.
        const auto reach = reach_within(kmask);
        std::uint32_t source = 0, sink = 0;
        for (Vertex u : k) {
            if ((reach[u] & kmask) == kmask) source |= 1u << u;
            bool reached = true;
            for (Vertex w : k) reached = reached && (reach[w] >> u & 1);
            if (reached) sink |= 1u << u;
        }

        std::vector<Vertex> path, found;
        std::uint32_t used = 0;
        // Longest path length still worth exploring: strictly shorter than
        // the best over earlier K, at most as long as the best for this K.
        auto limit = [&]() -> std::size_t {
            if (!found.empty()) return found.size();
            return best ? best->p.size() - 1 : n;
        };
        std::function<void(Vertex)> dfs = [&](Vertex v) {
            path.push_back(v);
            used |= 1u << v;
            if (source >> v & 1) {
                if (path.size() <= limit() &&
                    (found.empty() || path.size() < found.size() || path < found)) {
                    found = path;
                }
            } else if (path.size() < limit()) {
                for (Vertex w : g.out_neighbors(v)) {
                    if (!(used >> w & 1)) dfs(w);
                }
            }
            used &= ~(1u << v);
            path.pop_back();
        };
        for (Vertex s : k) {
            if (sink >> s & 1) dfs(s);
        }
        if (found.empty()) continue;
        if (!best || found.size() < best->p.size()) {
            ClosedTournament ct;
            ct.k = k;
            ct.p.vertices = found;
            best = ct;
        }
    }
    if (!best) throw std::logic_error("no closed tournament found in a strongly connected graph");
    best->c = set_union(best->k, best->p.vertex_set());
    std::uint32_t cmask = 0;
    for (Vertex u : best->c) cmask |= 1u << u;
    if (!strongly(cmask)) throw std::logic_error("brute-force closed tournament is not strongly connected");
    return *best;
}

bool independent_pattern_scan(const OrientedGraph& g, PatternId h) {
    // Arcs of the canonical form on positions 0..3.
    using Table = std::array<std::pair<int, int>, 3>;
    Table arcs{};
    switch (h) {
    case PatternId::P4Forward: arcs = Table{{{0, 1}, {1, 2}, {2, 3}}}; break;
    case PatternId::A4: arcs = Table{{{1, 0}, {1, 2}, {3, 2}}}; break;
    case PatternId::Q4: arcs = Table{{{0, 1}, {2, 1}, {3, 2}}}; break;
    case PatternId::Q4Prime: arcs = Table{{{1, 0}, {2, 1}, {2, 3}}}; break;
    }
    bool want[4][4] = {};
    for (auto [i, j] : arcs) want[i][j] = true;

    const std::size_t n = g.order();
    std::array<Vertex, 4> q{};
    for (q[0] = 0; q[0] < n; ++q[0]) {
        for (q[1] = q[0] + 1; q[1] < n; ++q[1]) {
            for (q[2] = q[1] + 1; q[2] < n; ++q[2]) {
                for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
                    std::array<Vertex, 4> perm = q;
                    do {
                        bool match = true;
                        for (int i = 0; i < 4 && match; ++i) {
                            for (int j = 0; j < 4 && match; ++j) {
                                if (i != j) match = g.has_arc(perm[i], perm[j]) == want[i][j];
                            }
                        }
                        if (match) return false;
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
            }
        }
    }
    return true;
}

}  // namespace dichi
