#include "dichi/dicolor.hpp"

#include <algorithm>

namespace dichi {

NotHFree NotHFree::remapped(const std::vector<Vertex>& to_parent) const {
    PatternWitness w = witness_;
    for (Vertex& v : w.vertices) v = to_parent[v];
    return NotHFree(w, where_);
}

void PartialColoring::assign_group(const VertexSet& group, const std::vector<Color>& colors, std::size_t palette) {
    for (std::size_t i = 0; i < group.size(); ++i) slot_[group[i]] = Slot{palette, colors[i]};
}

VertexSet PartialColoring::domain() const {
    VertexSet out;
    for (std::size_t v = 0; v < slot_.size(); ++v) {
        if (slot_[v]) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

std::size_t PartialColoring::palette_usage(std::size_t palette) const {
    std::vector<Color> seen;
    for (const auto& s : slot_) {
        if (s && s->palette == palette) seen.push_back(s->color);
    }
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

std::size_t PartialColoring::distinct() const {
    std::vector<Slot> seen;
    for (const auto& s : slot_) {
        if (s) seen.push_back(*s);
    }
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

std::vector<Color> PartialColoring::flatten(const VertexSet& over) const {
    std::vector<Slot> used;
    for (Vertex v : over) {
        if (!slot_[v]) throw std::logic_error("vertex " + std::to_string(v) + " left uncolored");
        used.push_back(*slot_[v]);
    }
    std::vector<Slot> ranks = used;
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    std::vector<Color> out(over.size());
    for (std::size_t i = 0; i < over.size(); ++i) {
        out[i] = static_cast<Color>(std::lower_bound(ranks.begin(), ranks.end(), used[i]) - ranks.begin());
    }
    return out;
}

std::optional<std::string> check_stage_budgets(const StageAccount& a) {
    const BigInt& gamma = a.gamma;
    const unsigned c = case_constant(a.pattern);
    const std::size_t nbhd_palettes = a.pattern == PatternId::P4Forward ? 4 : a.pattern == PatternId::A4 ? 5 : 1;
    if (a.path_colors > 2) return "path stage uses " + std::to_string(a.path_colors) + " colors";
    if (a.nk_palettes > a.omega) return "N[K] stage opened more than omega palettes";
    if (BigInt(a.nk_colors) > BigInt(a.omega) * gamma) return "N[K] stage exceeds omega * gamma";
    if (BigInt(a.y_colors) > 2 * gamma) return "Y stage exceeds 2 gamma";
    if (BigInt(a.path_nbhd_colors) > BigInt(nbhd_palettes) * gamma) {
        return "N(P) stage exceeds " + std::to_string(nbhd_palettes) + " gamma";
    }
    if (BigInt(a.max_palette) > gamma) return "a single palette exceeds gamma";
    if (a.total_colors != a.nk_colors + a.path_colors + a.path_nbhd_colors + a.y_colors) {
        return "stage counts do not add up to the total";
    }
    if (BigInt(a.total_colors) > BigInt(a.omega + c) * gamma + 2) return "dipolar set exceeds (omega + c) gamma + 2";
    return std::nullopt;
}

namespace {

// The first candidate realizing h, else any copy of h in g. A failed proof
// step on an h-free graph means a bug, not bad input.
PatternWitness witness_or_die(const OrientedGraph& g, PatternId h, const std::vector<Quad>& candidates,
                              const std::string& where) {
    for (const Quad& q : candidates) {
        if (auto o = orient_as(g, h, q)) return PatternWitness{h, *o};
    }
    if (auto w = find_pattern(g, h)) return *w;
    throw std::logic_error(where + " failed on a graph free of " + std::string(to_string(h)));
}

template <typename Pred>
std::optional<Vertex> first_such(const VertexSet& s, Pred pred) {
    for (Vertex v : s) {
        if (pred(v)) return v;
    }
    return std::nullopt;
}

// Groups `members` by key(v) in [0, buckets), recurses on each group and
// writes the colors into palette(key).
template <typename Key, typename Palette>
void color_by_key(PartialColoring& pc, const VertexSet& members, std::size_t buckets, Key key, Palette palette,
                  const Recurse& recurse) {
    std::vector<VertexSet> groups(buckets);
    for (Vertex v : members) groups[key(v)].push_back(v);
    for (std::size_t i = 0; i < buckets; ++i) {
        if (!groups[i].empty()) pc.assign_group(groups[i], recurse(groups[i]), palette(i));
    }
}

}  // namespace

PartialColoring color_qrs(const OrientedGraph& g, const VertexSet& q, const VertexSet& r, const VertexSet& s,
                          PatternId h, const Recurse& recurse, std::size_t palette_base) {
    const std::size_t n = g.order();
    PartialColoring pc(n);
    const auto in_q = mask_of(n, q);
    VertexSet rem = s;
    while (!rem.empty()) {
        const auto in_rem = mask_of(n, rem);
        const auto pivot = first_such(r, [&](Vertex x) {
            return std::any_of(g.neighbors(x).begin(), g.neighbors(x).end(), [&](Vertex u) { return in_rem[u] != 0; });
        });
        if (!pivot) throw std::invalid_argument("color_qrs: a vertex of s has no neighbor in r");

        const VertexSet near = set_intersection(g.neighbors(*pivot), rem);
        const auto in_near = mask_of(n, near);
        auto outside = [&](Vertex u) { return in_rem[u] && !in_near[u]; };
        VertexSet s1, s2;
        for (Vertex u : near) {
            const auto from = first_such(g.in_neighbors(u), outside);
            if (!from) {
                s1.push_back(u);
                continue;
            }
            const auto to = first_such(g.out_neighbors(u), outside);
            if (!to) {
                s2.push_back(u);
                continue;
            }
            std::vector<Quad> cands;
            for (auto qv : {first_such(g.in_neighbors(*pivot), [&](Vertex x) { return in_q[x] != 0; }),
                            first_such(g.out_neighbors(*pivot), [&](Vertex x) { return in_q[x] != 0; })}) {
                if (!qv) continue;
                cands.push_back({*qv, *pivot, u, *from});
                cands.push_back({*qv, *pivot, u, *to});
            }
            throw QrsClassificationFailure(u, witness_or_die(g, h, cands, "qrs classification"));
        }
        if (!s1.empty()) pc.assign_group(s1, recurse(s1), palette_base);
        if (!s2.empty()) pc.assign_group(s2, recurse(s2), palette_base + 1);
        rem = set_difference(rem, near);
    }
    return pc;
}

PartialColoring color_path_neighborhood(const OrientedGraph& g, const ClosedTournament& ct, PatternId h,
                                        const Recurse& recurse, std::size_t palette_base) {
    if (h == PatternId::Q4Prime) throw std::invalid_argument("q4p is handled on the reversed graph");
    const std::size_t n = g.order();
    PartialColoring pc(n);
    if (ct.p.empty()) return pc;

    const DirectedPath& p = ct.p;
    const std::size_t len = p.size();
    const AttachmentPartitions ap = attachment_partitions(g, p);
    const VertexSet t = set_difference(ap.neighborhood, neighborhood(g, ct.k, true));
    if (t.empty()) return pc;
    auto first = [&](Vertex v) { return ap.first_index[v]; };
    auto last = [&](Vertex v) { return ap.last_index[v]; };
    for (Vertex v : t) {
        // p_1 and p_l lie in K, so anything outside N[K] attaches inside.
        if (first(v) == 0 || last(v) + 1 >= len) throw std::logic_error("path endpoint outside K");
    }
    auto fail = [&](Quad q, const char* where) -> PatternWitness { return witness_or_die(g, h, {q}, where); };

    // Checks that no arc of g[t] runs from a vertex in `from` with key i to
    // a vertex in `to` with key j > i; wit builds the candidate copy of h.
    auto forbid_forward = [&](const VertexSet& from, const VertexSet& to, auto key, auto wit, const char* where) {
        const auto in_to = mask_of(n, to);
        for (Vertex v : from) {
            for (Vertex w : g.out_neighbors(v)) {
                if (in_to[w] && key(w) > key(v)) throw NotHFree(fail(wit(v, w), where), where);
            }
        }
    };
    auto forbid_backward = [&](const VertexSet& from, const VertexSet& to, auto key, auto wit, const char* where) {
        const auto in_to = mask_of(n, to);
        for (Vertex v : from) {
            for (Vertex w : g.out_neighbors(v)) {
                if (in_to[w] && key(w) < key(v)) throw NotHFree(fail(wit(v, w), where), where);
            }
        }
    };
    // v in F_i, w in F_j, j > i: p_{i-1} p_i v w is induced.
    auto first_wit = [&](Vertex v, Vertex w) { return Quad{p[first(v) - 1], p[first(v)], v, w}; };
    // v in L_i, w in L_j, j > i: v w p_j p_{j+1} is induced.
    auto last_wit = [&](Vertex v, Vertex w) { return Quad{v, w, p[last(w)], p[last(w) + 1]}; };

    const std::size_t omega = ct.k.size();
    switch (h) {
    case PatternId::Q4Prime:
        break;
    case PatternId::Q4: {
        // Arc w -> v with first(v) < first(w).
        forbid_backward(t, t, first, [&](Vertex w, Vertex v) { return first_wit(v, w); }, "q4 attachment arcs");
        color_by_key(pc, t, len, first, [&](std::size_t) { return palette_base; }, recurse);
        break;
    }
    case PatternId::P4Forward: {
        if (len <= 6) {
            color_by_key(pc, t, len, first, [&](std::size_t i) { return palette_base + i - 1; }, recurse);
            break;
        }
        const WRSets wr = w_r_sets(g, p, ap, h);
        VertexSet fset, lset, rest;
        for (Vertex v : t) {
            if (g.has_arc(p[first(v)], v)) {
                fset.push_back(v);
            } else if (g.has_arc(v, p[last(v)])) {
                lset.push_back(v);
            } else {
                rest.push_back(v);
            }
        }
        const VertexSet rset = set_intersection(rest, wr.r);
        const VertexSet near_p2 = set_difference(rest, rset);
        for (Vertex v : near_p2) {
            if (!g.adjacent(v, p[1])) throw std::logic_error("p4 remainder vertex not adjacent to p_2");
        }
        forbid_forward(fset, t, first, first_wit, "p4 first-attachment arcs");
        forbid_forward(t, lset, last, last_wit, "p4 last-attachment arcs");
        if (!rset.empty() && clique_number(g, rset) >= omega) {
            throw NotHFree(witness_or_die(g, h, {}, "p4 R clique number"), "p4 R clique number");
        }
        color_by_key(pc, fset, len, first, [&](std::size_t) { return palette_base; }, recurse);
        color_by_key(pc, lset, len, last, [&](std::size_t) { return palette_base + 1; }, recurse);
        if (!near_p2.empty()) pc.assign_group(near_p2, recurse(near_p2), palette_base + 2);
        if (!rset.empty()) pc.assign_group(rset, recurse(rset), palette_base + 3);
        break;
    }
    case PatternId::A4: {
        const WRSets wr = w_r_sets(g, p, ap, h);
        VertexSet fset, lset, rset;
        for (Vertex v : t) {
            if (g.has_arc(v, p[first(v)])) {
                fset.push_back(v);
            } else if (g.has_arc(p[last(v)], v)) {
                lset.push_back(v);
            } else {
                rset.push_back(v);
            }
        }
        if (rset != set_intersection(t, wr.r)) throw std::logic_error("a4 R classes disagree");
        forbid_forward(fset, t, first, first_wit, "a4 first-attachment arcs");
        forbid_forward(t, lset, last, last_wit, "a4 last-attachment arcs");
        // A forward arc across three positions would shortcut P.
        const auto in_r = mask_of(n, rset);
        for (Vertex v : rset) {
            for (Vertex w : g.out_neighbors(v)) {
                if (in_r[w] && first(w) >= first(v) + 3) {
                    throw NotHFree(witness_or_die(g, h, {}, "a4 R arcs"), "a4 R arcs");
                }
            }
        }
        color_by_key(pc, fset, len, first, [&](std::size_t) { return palette_base; }, recurse);
        color_by_key(pc, lset, len, last, [&](std::size_t) { return palette_base + 1; }, recurse);
        color_by_key(pc, rset, len, first, [&](std::size_t i) { return palette_base + 2 + (i + 1) % 3; }, recurse);
        break;
    }
    }
    return pc;
}

DipolarColoring color_dipolar_set(const OrientedGraph& g, const ClosedTournament& ct, const DipolarConstruction& d,
                                  PatternId h, const Recurse& recurse) {
    const std::size_t n = g.order();
    const std::size_t omega = ct.k.size();
    PartialColoring pc(n);

    // Palette layout: 0..omega-1 N[K] (one per vertex of K), omega the path,
    // omega+1..omega+5 N(P), omega+6 and omega+7 Y.
    const std::size_t path_palette = omega;
    const std::size_t nbhd_base = omega + 1;
    const std::size_t y_base = omega + 6;

    std::vector<VertexSet> groups(omega);
    for (Vertex v : neighborhood(g, ct.k, true)) {
        for (std::size_t i = 0; i < omega; ++i) {
            if (g.adjacent(v, ct.k[i])) {
                groups[i].push_back(v);
                break;
            }
        }
    }
    std::size_t nk_palettes = 0;
    for (std::size_t i = 0; i < omega; ++i) {
        if (groups[i].empty()) continue;
        ++nk_palettes;
        pc.assign_group(groups[i], recurse(groups[i]), i);
    }

    for (std::size_t i = 0; i < ct.p.size(); ++i) {
        if (!pc.colored(ct.p[i])) pc.assign(ct.p[i], Slot{path_palette, i % 2});
    }

    const PartialColoring nbhd = color_path_neighborhood(g, ct, h, recurse, nbhd_base);
    for (Vertex v : nbhd.domain()) {
        if (pc.colored(v)) throw std::logic_error("N(P) stage recolored a vertex");
        pc.assign(v, *nbhd.at(v));
    }

    const PartialColoring ys = color_qrs(g, d.parts.c, d.parts.x, d.parts.y, h, recurse, y_base);
    for (Vertex v : ys.domain()) {
        if (pc.colored(v)) throw std::logic_error("Y stage recolored a vertex");
        pc.assign(v, *ys.at(v));
    }

    const VertexSet members = d.set.members();
    if (pc.domain() != members) throw std::logic_error("stages do not cover the dipolar set exactly");

    StageAccount a;
    a.omega = omega;
    a.path_length = ct.p.size();
    a.pattern = h == PatternId::Q4Prime ? PatternId::Q4 : h;
    a.gamma = binding_function(case_constant(h), static_cast<unsigned>(omega - 1));
    a.nk_palettes = nk_palettes;
    for (std::size_t i = 0; i < y_base + 2; ++i) {
        const std::size_t used = pc.palette_usage(i);
        if (i < omega) a.nk_colors += used;
        else if (i == path_palette) a.path_colors += used;
        else if (i < y_base) a.path_nbhd_colors += used;
        else a.y_colors += used;
        if (i != path_palette) a.max_palette = std::max(a.max_palette, used);
    }
    a.total_colors = pc.distinct();
    return {std::move(pc), std::move(a)};
}

namespace {

class Engine {
public:
    Engine(PatternId h, const DicolorOptions& opts, DicolorTrace* trace) : h_(h), opts_(opts), trace_(trace) {}

    // Any graph: SCCs are independent and share colors.
    std::vector<Color> color(const OrientedGraph& g, std::size_t depth) {
        std::vector<Color> out(g.order(), 0);
        for (const VertexSet& comp : scc(g).components) {
            if (comp.size() == 1) continue;
            const InducedSubgraph sub = induced_subgraph(g, comp);
            std::vector<Color> c;
            try {
                c = peel(sub.graph, depth);
            } catch (const NotHFree& e) {
                throw e.remapped(sub.to_parent);
            }
            for (std::size_t i = 0; i < comp.size(); ++i) out[comp[i]] = c[i];
        }
        return out;
    }

    // g strongly connected.
    std::vector<Color> peel(const OrientedGraph& g, std::size_t depth) {
        const std::size_t n = g.order();
        PartialColoring slots(n);
        VertexSet all(n);
        for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);

        std::vector<VertexSet> work{all};
        while (!work.empty()) {
            const VertexSet t = std::move(work.back());
            work.pop_back();
            for (const VertexSet& comp : scc(g, t).components) {
                if (comp.size() == 1) {
                    slots.assign(comp.front(), Slot{0, 0});
                    continue;
                }
                const InducedSubgraph sub = induced_subgraph(g, comp);
                VertexSet peeled;
                try {
                    peeled = peel_once(sub.graph, slots, sub.to_parent, depth);
                } catch (const NotDipolar& e) {
                    throw NotHFree(e.witness(), "dipolar set").remapped(sub.to_parent);
                } catch (const NotHFree& e) {
                    throw e.remapped(sub.to_parent);
                }
                VertexSet rest = set_difference(comp, peeled);
                if (!rest.empty()) work.push_back(std::move(rest));
            }
        }
        return slots.flatten(all);
    }

private:
    // One dipolar set of the strongly connected g; S+ lands in palette 0,
    // S- in palette 1. Returns S in parent indices.
    VertexSet peel_once(const OrientedGraph& g, PartialColoring& slots, const std::vector<Vertex>& to_parent,
                        std::size_t depth) {
        const ClosedTournament ct = path_minimizing_closed_tournament(g, {opts_.tournament_cap});
        const DipolarConstruction d = build_dipolar_set(g, ct, h_);
        const Recurse recurse = [&](const VertexSet& s) {
            const InducedSubgraph sub = induced_subgraph(g, s);
            try {
                return color(sub.graph, depth + 1);
            } catch (const NotHFree& e) {
                throw e.remapped(sub.to_parent);
            }
        };
        DipolarColoring dc = color_dipolar_set(g, ct, d, h_, recurse);
        if (trace_) {
            dc.account.depth = depth;
            if (depth == 0 && !trace_->path_length) trace_->path_length = ct.p.size();
            ++trace_->peels;
            trace_->stages.push_back(dc.account);
        }
        const VertexSet members = d.set.members();
        const std::vector<Color> dense = dc.coloring.flatten(members);
        VertexSet peeled;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const std::size_t palette = contains(d.set.s_plus, members[i]) ? 0 : 1;
            slots.assign(to_parent[members[i]], Slot{palette, dense[i]});
            peeled.push_back(to_parent[members[i]]);
        }
        return peeled;
    }

    PatternId h_;
    DicolorOptions opts_;
    DicolorTrace* trace_;
};

PatternWitness reversed_witness(const PatternWitness& w) {
    const Quad& q = w.vertices;
    return PatternWitness{arc_reversal(w.pattern), Quad{q[3], q[2], q[1], q[0]}};
}

}  // namespace

std::vector<Color> peel_and_combine(const OrientedGraph& g, PatternId h, const DicolorOptions& opts,
                                    DicolorTrace* trace) {
    if (g.order() == 0) return {};
    if (!is_strongly_connected(g)) throw NotStronglyConnected("peel_and_combine requires a strongly connected graph");
    if (h == PatternId::Q4Prime) {
        try {
            return Engine(PatternId::Q4, opts, trace).peel(g.reversed(), 0);
        } catch (const NotHFree& e) {
            throw NotHFree(reversed_witness(e.witness()), e.where());
        }
    }
    return Engine(h, opts, trace).peel(g, 0);
}

Dicoloring dicolor_forbidding(const OrientedGraph& g, PatternId h, const DicolorOptions& opts, DicolorTrace* trace) {
    const bool verify = opts.verify.value_or(g.order() <= DicolorOptions::kVerifyLimit);
    if (verify) {
        if (auto w = find_pattern(g, h)) throw NotHFree(*w, "up-front verification");
    }
    const std::size_t omega = clique_number(g);
    if (trace) trace->omega = omega;

    std::vector<Color> colors;
    if (h == PatternId::Q4Prime) {
        try {
            colors = Engine(PatternId::Q4, opts, trace).color(g.reversed(), 0);
        } catch (const NotHFree& e) {
            throw NotHFree(reversed_witness(e.witness()), e.where());
        }
    } else {
        colors = Engine(h, opts, trace).color(g, 0);
    }

    auto invalid = [&](const std::string& reason) -> NotHFree {
        if (auto w = find_pattern(g, h)) return NotHFree(*w, "certificate validation");
        throw std::logic_error("engine produced an invalid coloring: " + reason);
    };
    Dicoloring d;
    try {
        d = make_dicoloring(g, colors);
    } catch (const InvalidColoring& e) {
        throw invalid(e.what());
    }
    if (omega > 0) d.claimed_bound = binding_function(case_constant(h), static_cast<unsigned>(omega));
    if (auto check = validate_dicoloring(g, d); !check.valid) throw invalid(check.reason);
    return d;
}

}  // namespace dichi
