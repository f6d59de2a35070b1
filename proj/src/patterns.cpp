#include "dichi/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace dichi {

std::string_view to_string(PatternId h) {
    switch (h) {
    case PatternId::P4Forward: return "p4";
    case PatternId::A4: return "a4";
    case PatternId::Q4: return "q4";
    case PatternId::Q4Prime: return "q4p";
    }
    return "?";
}

std::optional<PatternId> parse_pattern(std::string_view s) {
    std::string t;
    for (char ch : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (t == "p4" || t == "p4forward" || t == "p4-forward") return PatternId::P4Forward;
    if (t == "a4") return PatternId::A4;
    if (t == "q4") return PatternId::Q4;
    if (t == "q4p" || t == "q4'" || t == "q4prime" || t == "q4-prime") return PatternId::Q4Prime;
    return std::nullopt;
}

PatternId arc_reversal(PatternId h) {
    switch (h) {
    case PatternId::Q4: return PatternId::Q4Prime;
    case PatternId::Q4Prime: return PatternId::Q4;
    default: return h;
    }
}

std::string describe(const PatternWitness& w) {
    std::ostringstream os;
    os << to_string(w.pattern) << " (" << w.vertices[0] << "," << w.vertices[1] << ","
       << w.vertices[2] << "," << w.vertices[3] << ")";
    return os.str();
}

namespace {

// Direction of the three path edges a-b, b-c, c-d: true means forward
// (toward d).
constexpr std::array<bool, 3> forward_mask(PatternId h) {
    switch (h) {
    case PatternId::P4Forward: return {true, true, true};
    case PatternId::A4: return {false, true, false};
    case PatternId::Q4: return {true, false, false};
    case PatternId::Q4Prime: return {false, false, true};
    }
    return {true, true, true};
}

}  // namespace

bool realizes(const OrientedGraph& g, PatternId h, const Quad& q) {
    for (Vertex v : q) {
        if (v >= g.order()) return false;
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (q[i] == q[j]) return false;
        }
    }
    const auto mask = forward_mask(h);
    for (int i = 0; i < 3; ++i) {
        const Vertex x = q[i], y = q[i + 1];
        if (mask[i] ? !g.has_arc(x, y) : !g.has_arc(y, x)) return false;
    }
    return !g.adjacent(q[0], q[2]) && !g.adjacent(q[0], q[3]) && !g.adjacent(q[1], q[3]);
}

std::optional<Quad> orient_as(const OrientedGraph& g, PatternId h, const Quad& q) {
    if (realizes(g, h, q)) return q;
    Quad r{q[3], q[2], q[1], q[0]};
    if (realizes(g, h, r)) return r;
    return std::nullopt;
}

std::optional<PatternWitness> find_pattern(const OrientedGraph& g, PatternId h) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b : g.neighbors(a)) {
            for (Vertex c : g.neighbors(b)) {
                if (c == a || g.adjacent(a, c)) continue;
                for (Vertex d : g.neighbors(c)) {
                    if (d <= a || d == b || g.adjacent(a, d) || g.adjacent(b, d)) continue;
                    if (auto q = orient_as(g, h, {a, b, c, d})) return PatternWitness{h, *q};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Bron-Kerbosch with Tomita pivoting over the underlying graph of g[within].
class CliqueSearch {
public:
    CliqueSearch(const OrientedGraph& g, const VertexSet& within) : ids_(within) {
        const std::size_t k = within.size();
        adj_.assign(k, Bits(k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                if (g.adjacent(within[i], within[j])) {
                    adj_[i].set(j);
                    adj_[j].set(i);
                }
            }
        }
    }

    std::size_t maximum() {
        best_ = ids_.empty() ? 0 : 1;
        Bits p(ids_.size());
        p.set();
        std::vector<std::size_t> r;
        grow(r, p, Bits(ids_.size()), [this](const std::vector<std::size_t>& c) {
            best_ = std::max(best_, c.size());
        });
        return best_;
    }

    // Every clique of size `target` that is maximal; when target is the clique
    // number these are exactly the maximum cliques.
    std::vector<VertexSet> all_of_size(std::size_t target, std::size_t cap) {
        std::vector<VertexSet> out;
        if (target == 0) return out;
        best_ = target - 1;
        Bits p(ids_.size());
        p.set();
        std::vector<std::size_t> r;
        grow(r, p, Bits(ids_.size()), [&](const std::vector<std::size_t>& c) {
            if (c.size() != target) return;
            VertexSet s;
            for (auto i : c) s.push_back(ids_[i]);
            out.push_back(make_set(std::move(s)));
            if (cap != 0 && out.size() > cap) throw EnumerationCapExceeded(cap);
        });
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    template <typename Report>
    void grow(std::vector<std::size_t>& r, Bits p, Bits x, const Report& report) {
        if (p.none()) {
            if (x.none()) report(r);
            return;
        }
        if (r.size() + p.count() <= best_) return;

        std::size_t pivot = Bits::npos;
        std::size_t pivot_hits = 0;
        for (const Bits* s : {&p, &x}) {
            for (auto u = s->find_first(); u != Bits::npos; u = s->find_next(u)) {
                const std::size_t hits = (p & adj_[u]).count();
                if (pivot == Bits::npos || hits > pivot_hits) {
                    pivot = u;
                    pivot_hits = hits;
                }
            }
        }
        Bits candidates = p - adj_[pivot];
        for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
            r.push_back(v);
            grow(r, p & adj_[v], x & adj_[v], report);
            r.pop_back();
            p.reset(v);
            x.set(v);
            if (r.size() + p.count() <= best_) return;
        }
    }

    VertexSet ids_;
    std::vector<Bits> adj_;
    std::size_t best_ = 0;
};

}  // namespace

std::size_t clique_number(const OrientedGraph& g, const VertexSet& within) {
    return CliqueSearch(g, within).maximum();
}

std::size_t clique_number(const OrientedGraph& g) {
    VertexSet all(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) all[v] = static_cast<Vertex>(v);
    return clique_number(g, all);
}

MaximumTournaments maximum_tournaments(const OrientedGraph& g, std::size_t cap) {
    VertexSet all(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) all[v] = static_cast<Vertex>(v);
    CliqueSearch search(g, all);
    MaximumTournaments mt;
    mt.omega = search.maximum();
    mt.tournaments = search.all_of_size(mt.omega, cap);
    return mt;
}

VertexSet strong_neighborhood(const OrientedGraph& g, const VertexSet& a) {
    const auto in_a = mask_of(g.order(), a);
    VertexSet out;
    for (Vertex v : neighborhood(g, a, false)) {
        bool has_in = false, has_out = false;
        for (Vertex u : g.in_neighbors(v)) has_in = has_in || in_a[u];
        for (Vertex w : g.out_neighbors(v)) has_out = has_out || in_a[w];
        if (has_in && has_out) out.push_back(v);
    }
    return out;
}

}  // namespace dichi
