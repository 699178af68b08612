#ifndef UNFP_CUT_ALGEBRA_HPP
#define UNFP_CUT_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "unfp/coloring.hpp"
#include "unfp/graph.hpp"
#include "unfp/maxcut.hpp"

namespace unfp {

using EdgeList = std::vector<Edge>; // canonical: (min,max) pairs, sorted

/// trans(c): edges whose endpoints are both colored and colored differently.
EdgeList trans_edges(const Graph& g, const PartialColoring& c);

/// trans(c,F): edges with an endpoint in f whose colored ends differ.
EdgeList trans_at(const Graph& g, const PartialColoring& c, const FlipSet& f);

/// |trans(c) \ trans(c*F)| - |trans(c*F) \ trans(c)|. Negative iff flipping f
/// strictly enlarges the cut. Only edges with both endpoints colored count.
long dtrans(const Graph& g, const PartialColoring& c, const FlipSet& f);

/// Opposite-colored neighbors >= same-colored neighbors. nullopt when v or a
/// neighbor of v is uncolored (undetermined, distinct from false).
std::optional<bool> is_unfriendly_at(const Graph& g, const PartialColoring& c, Vertex v);

struct StrongMaxOptions {
    int exhaustive_limit = 20; // candidate count up to which all subsets are tried
    MaxcutOptions maxcut;      // fallback decision procedure
};

/// Candidates a strong-maximality test quantifies over: Finite-labeled
/// members of `a` in the domain, minus frozen vertices.
VertexSet flip_candidates(const Graph& g, const PartialColoring& c, const VertexSet& a);

/// No finite flip set of Finite-labeled vertices inside `a` improves the cut.
/// Exhaustive over subsets for small candidate counts, otherwise decided by
/// comparing |trans(c)| against the constrained max-cut over the same set.
bool is_strongly_maximal_in(const Graph& g, const PartialColoring& c, const VertexSet& a,
                            const StrongMaxOptions& opts = {});

/// A witness flip set with dtrans < 0 inside `a`, if one exists (smallest
/// size, then lexicographic). Same decision bounds as is_strongly_maximal_in.
std::optional<FlipSet> find_improving_flip_in(const Graph& g, const PartialColoring& c,
                                              const VertexSet& a, const StrongMaxOptions& opts = {});

struct ClosenessWitness {
    VertexSet diff;         // c △ c'
    VertexSet bound_region; // the A the diff must stay inside
};

/// Colorings are close in `a` when they differ on finitely many (automatic
/// here) Finite-labeled vertices inside `a`.
std::optional<ClosenessWitness> is_close(const Graph& g, const PartialColoring& c,
                                         const PartialColoring& d, const VertexSet& a);

enum class Tri { Yes, No, Unknown };

struct AlmostStrongMaxResult {
    Tri verdict = Tri::Unknown;
    std::optional<PartialColoring> witness; // strongly maximal coloring close to c
};

/// Bounded search for a strongly maximal coloring in `a` close to c: flip
/// sets over Finite candidates of size <= k, ascending, lexicographic. When k
/// covers every candidate the answer is definite; otherwise exhausting the
/// bound yields Unknown, never a false negative.
AlmostStrongMaxResult is_almost_strongly_maximal_in(const Graph& g, const PartialColoring& c,
                                                    const VertexSet& a, int k = 8,
                                                    const StrongMaxOptions& opts = {});

/// Minimal-perturbation repair loop: starting from c, repeatedly applies the
/// smallest improving flip set over `candidates` (sizes 1 and 2, lexicographic)
/// and falls back to the constrained max-cut oracle when short flips stall
/// below the optimum. The result is strongly maximal over `candidates` and
/// differs from c only there.
PartialColoring improve_to_strongly_maximal(const Graph& g, const PartialColoring& c,
                                            const VertexSet& candidates,
                                            const StrongMaxOptions& opts = {});

} // namespace unfp

#endif
