#include "unfp/maxcut.hpp"

#include <algorithm>
#include <array>

namespace unfp {

int cut_size(const Graph& g, const PartialColoring& c) {
    int cut = 0;
    for (const Edge& e : g.edges())
        if (c.has(e.first) && c.has(e.second) && c.color(e.first) != c.color(e.second)) ++cut;
    return cut;
}

namespace {

// Constrained max-cut instance compiled to positions 0..k-1 over the free
// vertices in ascending id order.
struct CutProblem {
    std::vector<Vertex> free_ids;
    std::vector<std::array<int, 2>> unary; // unary[pos][c] = cut gain of color c vs fixed neighbors
    std::vector<std::vector<int>> earlier; // earlier[pos] = adjacent positions < pos
    std::vector<int> potential;            // potential[pos] = undecidable edges from pos on
    int base = 0;                          // cut among fixed colored vertices

    int size() const { return int(free_ids.size()); }

    int gain(int pos, int color, const std::vector<int>& assigned) const {
        int s = unary[pos][color];
        for (int e : earlier[pos]) s += (assigned[e] != color);
        return s;
    }
};

CutProblem compile(const Graph& g, const PartialColoring& c0, const VertexSet& free) {
    CutProblem p;
    p.free_ids = free.to_vector();
    const int k = int(p.free_ids.size());
    std::vector<int> pos_of(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) pos_of[p.free_ids[i]] = i;

    p.unary.assign(k, {0, 0});
    p.earlier.assign(k, {});
    std::vector<int> decided_at(k, 0); // extra potential contributed at each position

    for (const Edge& e : g.edges()) {
        const int pu = pos_of[e.first], pv = pos_of[e.second];
        if (pu >= 0 && pv >= 0) {
            const int lo = std::min(pu, pv), hi = std::max(pu, pv);
            p.earlier[hi].push_back(lo);
            decided_at[hi] += 1;
        } else if (pu >= 0 || pv >= 0) {
            const int pf = pu >= 0 ? pu : pv;
            const Vertex other = pu >= 0 ? e.second : e.first;
            if (!c0.has(other)) continue; // uncolored endpoint: edge never counts
            const int oc = c0.color(other);
            p.unary[pf][0] += (oc != 0);
            p.unary[pf][1] += (oc != 1);
            decided_at[pf] += 1;
        } else {
            if (c0.has(e.first) && c0.has(e.second) && c0.color(e.first) != c0.color(e.second))
                p.base += 1;
        }
    }
    p.potential.assign(k + 1, 0);
    for (int i = k - 1; i >= 0; --i) p.potential[i] = p.potential[i + 1] + decided_at[i];
    return p;
}

// DFS over colors; updates best when a strictly better complete assignment
// appears. With target >= 0 it instead answers "is target reachable given the
// fixed prefix" and stops at the first witness.
struct Search {
    const CutProblem& p;
    std::vector<int> assigned;
    std::vector<int> best_assignment;
    int best = -1;
    int target = -1;
    int prefix_len = 0;

    explicit Search(const CutProblem& prob) : p(prob), assigned(prob.size(), -1) {}

    bool run(int pos, int value) {
        if (pos == p.size()) {
            if (target >= 0) return value >= target;
            if (value > best) {
                best = value;
                best_assignment = assigned;
            }
            return false;
        }
        if (pos < prefix_len) {
            // prefix colors are pinned by the caller
            const int c = assigned[pos];
            return run(pos + 1, value + p.gain(pos, c, assigned));
        }
        const int ceiling = value + p.potential[pos];
        if (target >= 0 ? ceiling < target : ceiling <= best) return false;
        for (int c = 0; c <= 1; ++c) {
            assigned[pos] = c;
            if (run(pos + 1, value + p.gain(pos, c, assigned))) return true;
            // re-prune between branches: best may have improved
            if (target < 0 && ceiling <= best) break;
        }
        assigned[pos] = -1;
        return false;
    }
};

int greedy_value(const CutProblem& p, const PartialColoring& c0, std::vector<int>& out) {
    const int k = p.size();
    out.assign(k, 0);
    for (int i = 0; i < k; ++i)
        if (c0.has(p.free_ids[i])) out[i] = c0.color(p.free_ids[i]);
    // single-flip local search; deterministic lowest-position-first
    auto total = [&] {
        int v = 0;
        std::vector<int> tmp = out;
        for (int i = 0; i < k; ++i) v += p.gain(i, tmp[i], tmp);
        return v;
    };
    int value = total();
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < k; ++i) {
            out[i] ^= 1;
            const int v = total();
            if (v > value) {
                value = v;
                improved = true;
            } else {
                out[i] ^= 1;
            }
        }
    }
    return value;
}

CutProblem checked_compile(const Graph& g, const PartialColoring& c0, const VertexSet& free,
                           const MaxcutOptions& opts) {
    g.check_subset(free);
    if (free.intersects(c0.frozen())) throw InputError("free set intersects frozen vertices");
    if (free.size() > opts.max_free)
        throw CapacityError("max-cut instance has " + std::to_string(free.size()) +
                            " free vertices, cap is " + std::to_string(opts.max_free));
    return compile(g, c0, free);
}

int optimum(const CutProblem& p, const PartialColoring& c0) {
    std::vector<int> seed;
    const int lower = greedy_value(p, c0, seed);
    Search s(p);
    s.best = lower - 1; // allow rediscovering the greedy value
    s.run(0, 0);
    return std::max(s.best, lower);
}

} // namespace

int oracle_maxcut_value(const Graph& g, const PartialColoring& c0, const VertexSet& free,
                        const MaxcutOptions& opts) {
    CutProblem p = checked_compile(g, c0, free, opts);
    return p.base + optimum(p, c0);
}

PartialColoring oracle_maxcut(const Graph& g, const PartialColoring& c0, const VertexSet& free,
                              const MaxcutOptions& opts) {
    CutProblem p = checked_compile(g, c0, free, opts);
    const int k = p.size();
    const int best = optimum(p, c0);

    // Lexicographic reconstruction: fix colors in id order, preferring 0
    // whenever the optimum stays reachable.
    std::vector<int> lex(k, -1);
    for (int i = 0; i < k; ++i) {
        Search s(p);
        s.target = best;
        s.prefix_len = i + 1;
        for (int j = 0; j < i; ++j) s.assigned[j] = lex[j];
        s.assigned[i] = 0;
        lex[i] = s.run(0, 0) ? 0 : 1;
    }

    PartialColoring out = c0;
    for (int i = 0; i < k; ++i) out.set_color(p.free_ids[i], lex[i]);
    return out;
}

} // namespace unfp
