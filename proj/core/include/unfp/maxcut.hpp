#ifndef UNFP_MAXCUT_HPP
#define UNFP_MAXCUT_HPP

#include "unfp/coloring.hpp"
#include "unfp/graph.hpp"

namespace unfp {

struct MaxcutOptions {
    /// Hard cap on |free|; exceeding it raises CapacityError.
    int max_free = 24;
};

/// Number of edges with both endpoints colored and colors differing.
int cut_size(const Graph& g, const PartialColoring& c);

/// Constrained exact max-cut: returns a coloring on domain(c0) ∪ free that
/// agrees with c0 off `free` and maximizes the cut. Edges with an uncolored
/// endpoint never count. Among maximum cuts the lexicographically smallest
/// color vector (ascending vertex id, color 0 < 1) is returned.
PartialColoring oracle_maxcut(const Graph& g, const PartialColoring& c0,
                              const VertexSet& free, const MaxcutOptions& opts = {});

/// Best achievable cut value for the same problem, without reconstructing
/// the lexicographic solution.
int oracle_maxcut_value(const Graph& g, const PartialColoring& c0,
                        const VertexSet& free, const MaxcutOptions& opts = {});

} // namespace unfp

#endif
