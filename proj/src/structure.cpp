#include "dichi/structure.hpp"

#include <algorithm>

namespace dichi {

ClosedTournament path_minimizing_closed_tournament(const OrientedGraph& g, const ClosedTournamentOptions& opts) {
    if (!is_strongly_connected(g)) {
        throw NotStronglyConnected("closed tournament requires a strongly connected graph");
    }
    const MaximumTournaments mt = maximum_tournaments(g, opts.tournament_cap);
    if (mt.omega < 2) {
        throw std::invalid_argument("closed tournament requires clique number >= 2");
    }

    std::optional<ClosedTournament> best;
    for (const VertexSet& k : mt.tournaments) {
        const SccDecomposition parts = scc(g, k);
        if (parts.strongly_connected()) {
            return ClosedTournament{k, {}, k};
        }
        // The condensation of a tournament is a total order, so the source
        // and sink components are unique. K already routes source -> sink;
        // the path closes the loop.
        auto path = shortest_directed_path(g, parts.components.back(), parts.components.front());
        if (!path) continue;  // impossible in a strongly connected graph
        if (!best || path->size() < best->p.size()) {
            best = ClosedTournament{k, std::move(*path), {}};
        }
    }
    if (!best) {
        throw std::logic_error("no closed tournament found in a strongly connected graph");
    }
    best->c = set_union(best->k, best->p.vertex_set());
    return *best;
}

std::optional<std::string> check_closed_tournament(const OrientedGraph& g, const ClosedTournament& ct) {
    const std::size_t omega = clique_number(g);
    if (ct.k.size() != omega) return "tournament size differs from the clique number";
    for (std::size_t i = 0; i < ct.k.size(); ++i) {
        for (std::size_t j = i + 1; j < ct.k.size(); ++j) {
            if (!g.adjacent(ct.k[i], ct.k[j])) return "K is not a tournament";
        }
    }
    if (ct.c != set_union(ct.k, ct.p.vertex_set())) return "C differs from K + V(P)";
    if (!is_strongly_connected(g, ct.c)) return "C does not induce a strongly connected subgraph";
    if (is_strongly_connected(g, ct.k) && !ct.p.empty()) return "K is strongly connected but P is not empty";
    if (!ct.p.empty()) {
        if (!is_directed_path(g, ct.p)) return "P is not a directed path";
        if (!contains(ct.k, ct.p.front()) || !contains(ct.k, ct.p.back())) return "P does not end in K";
        if (!is_forward_induced(g, ct.p)) return "P is not forward-induced";
    }
    return std::nullopt;
}

namespace {

// Tries every (first, last) combination of the induced path
// first - mid1 - mid2 - last and returns the one realizing h.
std::optional<PatternWitness> pick_witness(const OrientedGraph& g, PatternId h,
                                           const std::vector<Vertex>& firsts, Vertex mid1, Vertex mid2,
                                           const std::vector<Vertex>& lasts) {
    for (Vertex a : firsts) {
        for (Vertex d : lasts) {
            if (auto q = orient_as(g, h, {a, mid1, mid2, d})) return PatternWitness{h, *q};
        }
    }
    return std::nullopt;
}

template <typename Pred>
std::optional<Vertex> first_of(const VertexSet& s, Pred pred) {
    for (Vertex v : s) {
        if (pred(v)) return v;
    }
    return std::nullopt;
}

// Induced copy of h through v, which has an in-neighbor b1 and an
// out-neighbor b2 outside S.
std::optional<PatternWitness> dipolar_witness(const OrientedGraph& g, PatternId h, const DipolarParts& parts,
                                              const std::vector<char>& in_s, Vertex v) {
    const auto b1 = first_of(g.in_neighbors(v), [&](Vertex u) { return !in_s[u]; });
    const auto b2 = first_of(g.out_neighbors(v), [&](Vertex u) { return !in_s[u]; });
    if (!b1 || !b2) return std::nullopt;
    const std::vector<Vertex> outside{*b1, *b2};
    const auto in_c = mask_of(g.order(), parts.c);

    if (contains(parts.y, v)) {
        // c_i -> x or x -> c_i, x - v, v - b_j.
        const auto in_x = mask_of(g.order(), parts.x);
        for (Vertex x : g.neighbors(v)) {
            if (!in_x[x]) continue;
            const auto c1 = first_of(g.in_neighbors(x), [&](Vertex u) { return in_c[u] != 0; });
            const auto c2 = first_of(g.out_neighbors(x), [&](Vertex u) { return in_c[u] != 0; });
            if (!c1 || !c2) continue;
            if (auto w = pick_witness(g, h, {*c1, *c2}, x, v, outside)) return w;
        }
        return std::nullopt;
    }

    // v in Z: arcs (q1, p1) and (p2, q2) of C with q_i ~ v and p_i not ~ v.
    for (Vertex q : parts.c) {
        if (!g.adjacent(q, v)) continue;
        std::vector<Vertex> far;
        for (Vertex p : g.neighbors(q)) {
            if (in_c[p] && p != v && !g.adjacent(p, v)) far.push_back(p);
        }
        if (far.empty()) continue;
        if (auto w = pick_witness(g, h, far, q, v, outside)) return w;
    }
    return std::nullopt;
}

}  // namespace

DipolarConstruction build_dipolar_set(const OrientedGraph& g, const ClosedTournament& ct, PatternId h) {
    DipolarConstruction out;
    DipolarParts& parts = out.parts;
    parts.c = ct.c;
    parts.x = strong_neighborhood(g, parts.c);
    const VertexSet closed_c = neighborhood(g, parts.c, true);
    parts.z = set_difference(neighborhood(g, parts.c, false), parts.x);
    parts.y = set_difference(neighborhood(g, parts.x, false), closed_c);

    const VertexSet s = set_union(closed_c, parts.y);
    const auto in_s = mask_of(g.order(), s);
    for (Vertex v : s) {
        const bool out_leaves = std::any_of(g.out_neighbors(v).begin(), g.out_neighbors(v).end(),
                                            [&](Vertex w) { return !in_s[w]; });
        const bool in_arrives = std::any_of(g.in_neighbors(v).begin(), g.in_neighbors(v).end(),
                                            [&](Vertex w) { return !in_s[w]; });
        if (out_leaves && in_arrives) {
            auto w = dipolar_witness(g, h, parts, in_s, v);
            if (!w) w = find_pattern(g, h);
            if (!w) {
                throw std::logic_error("dipolar construction failed on a graph free of " +
                                       std::string(to_string(h)));
            }
            throw NotDipolar(v, *w);
        }
        (out_leaves ? out.set.s_minus : out.set.s_plus).push_back(v);
    }
    return out;
}

DipolarCheck verify_dipolar(const OrientedGraph& g, const DipolarSet& d) {
    DipolarCheck res;
    if (!disjoint(d.s_plus, d.s_minus)) {
        res.ok = false;
        res.vertex = set_intersection(d.s_plus, d.s_minus).front();
        res.reason = "S+ and S- intersect";
        return res;
    }
    const VertexSet s = d.members();
    if (s.empty()) {
        res.ok = false;
        res.reason = "dipolar set is empty";
        return res;
    }
    const auto in_s = mask_of(g.order(), s);
    for (Vertex v : s) {
        if (contains(d.s_plus, v)) {
            for (Vertex w : g.out_neighbors(v)) {
                if (!in_s[w]) {
                    res.ok = false;
                    res.vertex = v;
                    res.arc = Arc{v, w};
                    res.reason = "vertex of S+ has an out-neighbor outside S";
                    return res;
                }
            }
        } else {
            for (Vertex w : g.in_neighbors(v)) {
                if (!in_s[w]) {
                    res.ok = false;
                    res.vertex = v;
                    res.arc = Arc{w, v};
                    res.reason = "vertex of S- has an in-neighbor outside S";
                    return res;
                }
            }
        }
    }
    return res;
}

AttachmentPartitions attachment_partitions(const OrientedGraph& g, const DirectedPath& p) {
    const std::size_t len = p.size();
    AttachmentPartitions ap;
    ap.first.resize(len);
    ap.first_plus.resize(len);
    ap.first_minus.resize(len);
    ap.last.resize(len);
    ap.last_plus.resize(len);
    ap.last_minus.resize(len);
    ap.first_index.assign(g.order(), AttachmentPartitions::npos);
    ap.last_index.assign(g.order(), AttachmentPartitions::npos);

    ap.neighborhood = neighborhood(g, p.vertex_set(), false);
    for (Vertex v : ap.neighborhood) {
        for (std::size_t i = 0; i < len; ++i) {
            if (!g.adjacent(v, p[i])) continue;
            if (ap.first_index[v] == AttachmentPartitions::npos) ap.first_index[v] = i;
            ap.last_index[v] = i;
        }
        const std::size_t f = ap.first_index[v];
        const std::size_t l = ap.last_index[v];
        ap.first[f].push_back(v);
        (g.has_arc(v, p[f]) ? ap.first_plus[f] : ap.first_minus[f]).push_back(v);
        ap.last[l].push_back(v);
        (g.has_arc(v, p[l]) ? ap.last_plus[l] : ap.last_minus[l]).push_back(v);
    }
    return ap;
}

WRSets w_r_sets(const OrientedGraph& g, const DirectedPath& p, const AttachmentPartitions& parts, PatternId which) {
    if (which != PatternId::P4Forward && which != PatternId::A4) {
        throw std::invalid_argument("W/R sets are defined for the p4 and a4 cases only");
    }
    const std::size_t len = p.size();
    if (len < 3) throw std::invalid_argument("W/R sets need a path on at least 3 vertices");

    const bool forward = which == PatternId::P4Forward;
    VertexSet w;
    for (std::size_t i = 1; i + 1 < len; ++i) {
        w = set_union(w, forward ? parts.first_minus[i] : parts.first_plus[i]);
        w = set_union(w, forward ? parts.last_plus[i] : parts.last_minus[i]);
    }
    VertexSet ends{p[0], p[len - 1]};
    if (forward) ends.push_back(p[1]);
    const VertexSet excluded = set_union(neighborhood(g, make_set(ends), false), w);
    return {w, set_difference(parts.neighborhood, excluded)};
}

}  // namespace dichi
