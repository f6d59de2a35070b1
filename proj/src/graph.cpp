#include "dichi/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

namespace dichi {

OrientedGraph OrientedGraph::build(std::size_t n, std::span<const Arc> arcs) {
    OrientedGraph g;
    g.n_ = n;
    g.rel_.assign(n * n, kNone);
    g.out_.resize(n);
    g.in_.resize(n);
    g.nbr_.resize(n);

    for (const Arc& a : arcs) {
        if (a.tail >= n || a.head >= n) {
            throw GraphError(GraphError::Kind::OutOfRange, a,
                             "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                 ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        if (a.tail == a.head) {
            throw GraphError(GraphError::Kind::SelfLoop, a,
                             "self-loop at vertex " + std::to_string(a.tail));
        }
        auto& fwd = g.rel_[a.tail * n + a.head];
        if (fwd == kIn) {
            throw GraphError(GraphError::Kind::Digon, a,
                             "digon (" + std::to_string(a.head) + "," + std::to_string(a.tail) + ")/(" +
                                 std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
        }
        if (fwd == kOut) continue;
        fwd = kOut;
        g.rel_[a.head * n + a.tail] = kIn;
        g.arcs_.push_back(a);
    }

    std::sort(g.arcs_.begin(), g.arcs_.end());
    for (const Arc& a : g.arcs_) {
        g.out_[a.tail].push_back(a.head);
        g.in_[a.head].push_back(a.tail);
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(g.in_[v].begin(), g.in_[v].end());
        g.nbr_[v] = set_union(g.out_[v], g.in_[v]);
    }
    return g;
}

OrientedGraph OrientedGraph::reversed() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (const Arc& a : arcs_) rev.push_back({a.head, a.tail});
    return build(n_, rev);
}

InducedSubgraph induced_subgraph(const OrientedGraph& g, const VertexSet& s) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (i != j && g.has_arc(s[i], s[j])) {
                arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
            }
        }
    }
    return {OrientedGraph::build(s.size(), arcs), s};
}

bool is_directed_path(const OrientedGraph& g, const DirectedPath& p) {
    if (make_set(p.vertices).size() != p.size()) return false;
    for (Vertex v : p.vertices) {
        if (v >= g.order()) return false;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.has_arc(p[i], p[i + 1])) return false;
    }
    return true;
}

SccDecomposition scc(const OrientedGraph& g) {
    VertexSet all(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) all[v] = static_cast<Vertex>(v);
    return scc(g, all);
}

// Iterative Tarjan. Tarjan emits components in reverse topological order.
SccDecomposition scc(const OrientedGraph& g, const VertexSet& within) {
    const std::size_t n = g.order();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const auto in_scope = mask_of(n, within);

    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::size_t>> call;  // vertex, next out-neighbor position
    std::size_t counter = 0;

    SccDecomposition out;
    out.component_of.assign(n, SccDecomposition::npos);

    for (Vertex root : within) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!call.empty()) {
            auto& [v, pos] = call.back();
            const auto& succ = g.out_neighbors(v);
            if (pos < succ.size()) {
                Vertex w = succ[pos++];
                if (!in_scope[w]) continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            Vertex done = v;
            call.pop_back();
            if (!call.empty()) {
                Vertex parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                VertexSet comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                out.components.push_back(std::move(comp));
            }
        }
    }

    std::reverse(out.components.begin(), out.components.end());
    for (std::size_t c = 0; c < out.components.size(); ++c) {
        for (Vertex v : out.components[c]) out.component_of[v] = c;
    }
    return out;
}

bool is_strongly_connected(const OrientedGraph& g) {
    return g.order() > 0 && scc(g).strongly_connected();
}

bool is_strongly_connected(const OrientedGraph& g, const VertexSet& within) {
    return !within.empty() && scc(g, within).strongly_connected();
}

AcyclicityResult induced_is_acyclic(const OrientedGraph& g, const VertexSet& s) {
    const std::size_t n = g.order();
    const auto in_s = mask_of(n, s);
    AcyclicityResult res;

    // Kahn with a min-heap substitute: s is small, so a sorted scan of the
    // ready set is fine and keeps the order deterministic.
    std::vector<std::size_t> indeg(n, 0);
    for (Vertex v : s) {
        for (Vertex w : g.out_neighbors(v)) {
            if (in_s[w]) ++indeg[w];
        }
    }
    std::vector<Vertex> ready;
    for (Vertex v : s) {
        if (indeg[v] == 0) ready.push_back(v);
    }
    std::vector<Vertex> order;
    while (!ready.empty()) {
        auto it = std::min_element(ready.begin(), ready.end());
        Vertex v = *it;
        ready.erase(it);
        order.push_back(v);
        for (Vertex w : g.out_neighbors(v)) {
            if (in_s[w] && --indeg[w] == 0) ready.push_back(w);
        }
    }
    if (order.size() == s.size()) {
        res.topological_order = std::move(order);
        return res;
    }

    // Extract a cycle by DFS among the vertices Kahn could not remove.
    res.acyclic = false;
    std::vector<char> state(n, 0);  // 0 new, 1 on path, 2 finished
    std::vector<Vertex> path;
    std::vector<std::size_t> pos;
    for (Vertex root : s) {
        if (indeg[root] == 0 || state[root] != 0) continue;
        path = {root};
        pos = {0};
        state[root] = 1;
        while (!path.empty()) {
            Vertex v = path.back();
            const auto& succ = g.out_neighbors(v);
            if (pos.back() < succ.size()) {
                Vertex w = succ[pos.back()++];
                if (!in_s[w] || indeg[w] == 0) continue;
                if (state[w] == 1) {
                    auto start = std::find(path.begin(), path.end(), w);
                    res.cycle.assign(start, path.end());
                    return res;
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    path.push_back(w);
                    pos.push_back(0);
                }
                continue;
            }
            state[v] = 2;
            path.pop_back();
            pos.pop_back();
        }
    }
    return res;  // unreachable for a consistent graph
}

std::optional<DirectedPath> shortest_directed_path(const OrientedGraph& g,
                                                   const VertexSet& sources,
                                                   const VertexSet& targets,
                                                   const VertexSet& forbidden_interior) {
    const std::size_t n = g.order();
    if (sources.empty() || targets.empty()) return std::nullopt;
    const auto is_target = mask_of(n, targets);
    const auto forbidden = mask_of(n, forbidden_interior);

    // dist[v]: vertex count of a shortest valid path starting at v.
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n, inf);
    std::deque<Vertex> queue;
    for (Vertex t : targets) {
        dist[t] = 1;
        queue.push_back(t);
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        // v is a path endpoint (target) or must serve as an interior vertex.
        if (!is_target[v] && forbidden[v]) continue;
        for (Vertex u : g.in_neighbors(v)) {
            if (dist[u] == inf) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }

    std::optional<Vertex> start;
    for (Vertex s : sources) {
        if (dist[s] != inf && (!start || dist[s] < dist[*start])) start = s;
    }
    if (!start) return std::nullopt;

    DirectedPath p;
    Vertex cur = *start;
    p.vertices.push_back(cur);
    while (dist[cur] > 1) {
        const std::size_t want = dist[cur] - 1;
        for (Vertex w : g.out_neighbors(cur)) {
            if (dist[w] != want) continue;
            if (want > 1 && (is_target[w] || forbidden[w])) continue;
            cur = w;
            break;
        }
        p.vertices.push_back(cur);
    }
    return p;
}

bool is_forward_induced(const OrientedGraph& g, const DirectedPath& p) {
    std::vector<std::size_t> position(g.order(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < p.size(); ++i) position[p[i]] = i;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (Vertex w : g.out_neighbors(p[i])) {
            std::size_t j = position[w];
            if (j != static_cast<std::size_t>(-1) && j > i + 1) return false;
        }
    }
    return true;
}

VertexSet neighborhood(const OrientedGraph& g, const VertexSet& s, bool closed) {
    std::vector<char> mark(g.order(), 0);
    for (Vertex v : s) {
        for (Vertex w : g.neighbors(v)) mark[w] = 1;
        if (closed) mark[v] = 1;
    }
    if (!closed) {
        for (Vertex v : s) mark[v] = 0;
    }
    VertexSet out;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (mark[v]) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

}  // namespace dichi
