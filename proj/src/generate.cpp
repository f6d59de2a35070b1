#include "dichi/generate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace dichi {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Mutable adjacency used while growing a graph.
class Builder {
public:
    explicit Builder(std::size_t n) : n_(n), rel_(n * n, 0), nbr_(n) {}

    bool adjacent(Vertex a, Vertex b) const { return rel_[a * n_ + b] != 0; }
    bool arc(Vertex a, Vertex b) const { return rel_[a * n_ + b] == 1; }

    void add(Vertex a, Vertex b) {
        rel_[a * n_ + b] = 1;
        rel_[b * n_ + a] = 2;
        nbr_[a].push_back(b);
        nbr_[b].push_back(a);
        arcs_.push_back({a, b});
    }
    void remove_last() {
        const Arc a = arcs_.back();
        arcs_.pop_back();
        rel_[a.tail * n_ + a.head] = 0;
        rel_[a.head * n_ + a.tail] = 0;
        nbr_[a.tail].pop_back();
        nbr_[a.head].pop_back();
    }

    // Does some induced path through the (already added) edge a-b carry h?
    bool pattern_through(Vertex a, Vertex b, PatternId h) const {
        auto free_pair = [&](Vertex x, Vertex y) { return x != y && !adjacent(x, y); };
        // a and b in the middle.
        for (Vertex x : nbr_[a]) {
            if (x == b || !free_pair(x, b)) continue;
            for (Vertex y : nbr_[b]) {
                if (y == a || !free_pair(y, a) || !free_pair(x, y)) continue;
                if (carries({x, a, b, y}, h)) return true;
            }
        }
        // a-b at one end.
        for (auto [s, t] : {std::pair{a, b}, std::pair{b, a}}) {
            for (Vertex x : nbr_[t]) {
                if (x == s || !free_pair(x, s)) continue;
                for (Vertex y : nbr_[x]) {
                    if (y == t || !free_pair(y, s) || !free_pair(y, t)) continue;
                    if (carries({s, t, x, y}, h)) return true;
                }
            }
        }
        return false;
    }

    // Is there a clique of size k among cands?
    bool has_clique(const std::vector<Vertex>& cands, std::size_t k) const {
        if (k == 0) return true;
        if (cands.size() < k) return false;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            std::vector<Vertex> next;
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                if (adjacent(cands[i], cands[j])) next.push_back(cands[j]);
            }
            if (has_clique(next, k - 1)) return true;
        }
        return false;
    }

    std::vector<Vertex> common(Vertex a, Vertex b) const {
        std::vector<Vertex> out;
        for (Vertex x : nbr_[a]) {
            if (adjacent(x, b)) out.push_back(x);
        }
        return out;
    }

    OrientedGraph finish() const { return OrientedGraph::build(n_, arcs_); }

private:
    // q is an induced path q0-q1-q2-q3; checks both reading directions.
    bool carries(std::array<Vertex, 4> q, PatternId h) const {
        std::array<bool, 3> fwd{};
        switch (h) {
        case PatternId::P4Forward: fwd = {true, true, true}; break;
        case PatternId::A4: fwd = {false, true, false}; break;
        case PatternId::Q4: fwd = {true, false, false}; break;
        case PatternId::Q4Prime: fwd = {false, false, true}; break;
        }
        for (int pass = 0; pass < 2; ++pass) {
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) ok = fwd[i] ? arc(q[i], q[i + 1]) : arc(q[i + 1], q[i]);
            if (ok) return true;
            std::reverse(q.begin(), q.end());
        }
        return false;
    }

    std::size_t n_;
    std::vector<char> rel_;
    std::vector<std::vector<Vertex>> nbr_;
    std::vector<Arc> arcs_;
};

}  // namespace

OrientedGraph random_oriented(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(p), coin(0.5);
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (!keep(rng)) continue;
            arcs.push_back(coin(rng) ? Arc{i, j} : Arc{j, i});
        }
    }
    return OrientedGraph::build(n, arcs);
}

OrientedGraph random_tournament(std::size_t n, std::uint64_t seed) { return random_oriented(n, 1.0, seed); }

OrientedGraph transitive_tournament(std::size_t n) {
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) arcs.push_back({i, j});
    }
    return OrientedGraph::build(n, arcs);
}

OrientedGraph directed_cycle(std::size_t n) {
    std::vector<Arc> arcs;
    if (n >= 3) {
        for (Vertex i = 0; i < n; ++i) arcs.push_back({i, static_cast<Vertex>((i + 1) % n)});
    } else if (n == 2) {
        arcs.push_back({0, 1});  // a 2-cycle would be a digon
    }
    return OrientedGraph::build(n, arcs);
}

OrientedGraph chorded_path(std::size_t n, double q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution chord(q);
    std::vector<Arc> arcs;
    for (Vertex i = 0; i + 1 < n; ++i) arcs.push_back({i, static_cast<Vertex>(i + 1)});
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 2; j < n; ++j) {
            if (chord(rng)) arcs.push_back({j, i});
        }
    }
    return OrientedGraph::build(n, arcs);
}

OrientedGraph hfree_rejection(const std::function<OrientedGraph(std::uint64_t)>& base, PatternId h,
                              std::size_t max_tries, std::uint64_t seed) {
    for (std::size_t i = 0; i < max_tries; ++i) {
        OrientedGraph g = base(splitmix(seed + i));
        if (is_free_of(g, h)) return g;
    }
    throw MaxTriesExceeded(max_tries);
}

OrientedGraph hfree_greedy(const GreedyParams& params, PatternId h, std::uint64_t seed) {
    const std::size_t n = params.n;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution offer(params.p), coin(0.5);
    Builder b(n);

    auto try_add = [&](Vertex u, Vertex v) {
        if (params.max_omega > 0 && b.has_clique(b.common(u, v), params.max_omega - 1)) return;
        b.add(u, v);
        if (b.pattern_through(u, v, h)) b.remove_last();
    };

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t len = std::min(params.cycle, n);
    if (len >= 3) {
        for (std::size_t i = 0; i < len; ++i) try_add(perm[i], perm[(i + 1) % len]);
    }

    std::vector<Arc> pairs;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) pairs.push_back({i, j});
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (const Arc& pr : pairs) {
        const bool offered = offer(rng);
        const bool flip = coin(rng);
        if (!offered || b.adjacent(pr.tail, pr.head)) continue;
        if (flip) {
            try_add(pr.head, pr.tail);
        } else {
            try_add(pr.tail, pr.head);
        }
    }
    return b.finish();
}

OrientedGraph substitute(const OrientedGraph& outer, const std::vector<OrientedGraph>& parts) {
    if (parts.size() != outer.order()) throw std::invalid_argument("substitute needs one part per outer vertex");
    std::vector<Vertex> offset(parts.size() + 1, 0);
    for (std::size_t v = 0; v < parts.size(); ++v) offset[v + 1] = offset[v] + static_cast<Vertex>(parts[v].order());
    std::vector<Arc> arcs;
    for (std::size_t v = 0; v < parts.size(); ++v) {
        for (const Arc& a : parts[v].arcs()) arcs.push_back({a.tail + offset[v], a.head + offset[v]});
    }
    for (const Arc& a : outer.arcs()) {
        for (Vertex x = offset[a.tail]; x < offset[a.tail + 1]; ++x) {
            for (Vertex y = offset[a.head]; y < offset[a.head + 1]; ++y) arcs.push_back({x, y});
        }
    }
    return OrientedGraph::build(offset.back(), arcs);
}

}  // namespace dichi
