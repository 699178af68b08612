#include "unfp/cut_algebra.hpp"

#include <algorithm>

namespace unfp {

EdgeList trans_edges(const Graph& g, const PartialColoring& c) {
    EdgeList out;
    for (const Edge& e : g.edges())
        if (c.has(e.first) && c.has(e.second) && c.color(e.first) != c.color(e.second))
            out.push_back(e);
    return out;
}

EdgeList trans_at(const Graph& g, const PartialColoring& c, const FlipSet& f) {
    g.check_subset(f);
    EdgeList out;
    for (const Edge& e : g.edges()) {
        if (!f.contains(e.first) && !f.contains(e.second)) continue;
        if (c.has(e.first) && c.has(e.second) && c.color(e.first) != c.color(e.second))
            out.push_back(e);
    }
    return out;
}

long dtrans(const Graph& g, const PartialColoring& c, const FlipSet& f) {
    g.check_subset(f);
    if (!f.is_subset_of(c.domain())) throw InputError("dtrans: flip set leaves the domain");
    // Only edges incident to f can move between the cuts; edges with both
    // endpoints in f are unaffected.
    long lost = 0, gained = 0;
    f.for_each([&](Vertex u) {
        g.neighbors(u).for_each([&](Vertex w) {
            if (f.contains(w)) return; // counted from neither side
            if (!c.has(w)) return;
            if (c.color(u) != c.color(w))
                ++lost;
            else
                ++gained;
        });
    });
    return lost - gained;
}

std::optional<bool> is_unfriendly_at(const Graph& g, const PartialColoring& c, Vertex v) {
    g.check_vertex(v);
    if (!c.has(v)) return std::nullopt;
    int same = 0, opposite = 0;
    bool undetermined = false;
    g.neighbors(v).for_each([&](Vertex u) {
        if (!c.has(u)) {
            undetermined = true;
            return;
        }
        if (c.color(u) == c.color(v))
            ++same;
        else
            ++opposite;
    });
    if (undetermined) return std::nullopt;
    return opposite >= same;
}

VertexSet flip_candidates(const Graph& g, const PartialColoring& c, const VertexSet& a) {
    g.check_subset(a);
    return ((a & g.finite_vertices()) & c.domain()) - c.frozen();
}

namespace {

// Enumerates subsets of `cand` of exactly `size`, ascending lexicographically
// by member ids, invoking f(subset) until f returns true.
bool for_each_subset_of_size(const std::vector<Vertex>& cand, int size, int universe,
                             const std::function<bool(const VertexSet&)>& f) {
    const int m = int(cand.size());
    if (size > m) return false;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        VertexSet s(universe);
        for (int i : idx) s.insert(cand[i]);
        if (f(s)) return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == m - size + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::optional<FlipSet> improving_flip_up_to(const Graph& g, const PartialColoring& c,
                                            const std::vector<Vertex>& cand, int max_size) {
    std::optional<FlipSet> found;
    for (int size = 1; size <= max_size && !found; ++size) {
        for_each_subset_of_size(cand, size, g.vertex_count(), [&](const VertexSet& f) {
            if (dtrans(g, c, f) < 0) {
                found = f;
                return true;
            }
            return false;
        });
    }
    return found;
}

} // namespace

bool is_strongly_maximal_in(const Graph& g, const PartialColoring& c, const VertexSet& a,
                            const StrongMaxOptions& opts) {
    const VertexSet cand = flip_candidates(g, c, a);
    if (cand.empty()) return true;
    if (cand.size() <= opts.exhaustive_limit)
        return !improving_flip_up_to(g, c, cand.to_vector(), cand.size()).has_value();
    // Decision by value: on finite instances, no improving Finite flip set
    // inside `a` exists iff the current cut already matches the constrained
    // max-cut over the candidates.
    return cut_size(g, c) == oracle_maxcut_value(g, c, cand, opts.maxcut);
}

std::optional<FlipSet> find_improving_flip_in(const Graph& g, const PartialColoring& c,
                                              const VertexSet& a, const StrongMaxOptions& opts) {
    const VertexSet cand = flip_candidates(g, c, a);
    if (cand.empty()) return std::nullopt;
    if (cand.size() <= opts.exhaustive_limit)
        return improving_flip_up_to(g, c, cand.to_vector(), cand.size());
    if (cut_size(g, c) == oracle_maxcut_value(g, c, cand, opts.maxcut)) return std::nullopt;
    const PartialColoring opt = oracle_maxcut(g, c, cand, opts.maxcut);
    return coloring_diff(c, opt);
}

std::optional<ClosenessWitness> is_close(const Graph& g, const PartialColoring& c,
                                         const PartialColoring& d, const VertexSet& a) {
    g.check_subset(a);
    const VertexSet diff = coloring_diff(c, d);
    if (!diff.is_subset_of(a)) return std::nullopt;
    if (!diff.is_subset_of(g.finite_vertices())) return std::nullopt;
    return ClosenessWitness{diff, a};
}

AlmostStrongMaxResult is_almost_strongly_maximal_in(const Graph& g, const PartialColoring& c,
                                                    const VertexSet& a, int k,
                                                    const StrongMaxOptions& opts) {
    AlmostStrongMaxResult res;
    if (is_strongly_maximal_in(g, c, a, opts)) {
        res.verdict = Tri::Yes;
        res.witness = c;
        return res;
    }
    const VertexSet cand = flip_candidates(g, c, a);
    const auto cand_v = cand.to_vector();
    const int bound = std::min<int>(k, int(cand_v.size()));
    for (int size = 1; size <= bound; ++size) {
        std::optional<PartialColoring> hit;
        for_each_subset_of_size(cand_v, size, g.vertex_count(), [&](const VertexSet& f) {
            PartialColoring c2 = flip(c, f);
            if (is_strongly_maximal_in(g, c2, a, opts)) {
                hit = std::move(c2);
                return true;
            }
            return false;
        });
        if (hit) {
            res.verdict = Tri::Yes;
            res.witness = std::move(hit);
            return res;
        }
    }
    // Any coloring close to c in `a` differs from c exactly on a subset of the
    // candidates, so a bound covering every candidate makes the search complete.
    res.verdict = bound >= int(cand_v.size()) ? Tri::No : Tri::Unknown;
    return res;
}

PartialColoring improve_to_strongly_maximal(const Graph& g, const PartialColoring& c,
                                            const VertexSet& candidates,
                                            const StrongMaxOptions& opts) {
    g.check_subset(candidates);
    VertexSet cand = (candidates & c.domain()) - c.frozen();
    if (!cand.is_subset_of(g.finite_vertices()))
        throw InputError("improve candidates must be Finite-labeled");
    PartialColoring cur = c;
    if (cand.empty()) return cur;
    const auto cand_v = cand.to_vector();
    while (true) {
        // |trans| strictly increases with every applied set, so this halts.
        auto f = improving_flip_up_to(g, cur, cand_v, std::min<size_t>(2, cand_v.size()));
        if (f) {
            cur = flip(cur, *f);
            continue;
        }
        if (cut_size(g, cur) == oracle_maxcut_value(g, cur, cand, opts.maxcut)) return cur;
        return oracle_maxcut(g, cur, cand, opts.maxcut);
    }
}

} // namespace unfp
