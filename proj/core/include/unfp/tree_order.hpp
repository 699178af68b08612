#ifndef UNFP_TREE_ORDER_HPP
#define UNFP_TREE_ORDER_HPP

#include <optional>
#include <vector>

#include "unfp/graph.hpp"

namespace unfp {

/// Rooted spanning tree with the induced tree-order. u <= v means u lies on
/// the root-to-v path. Ancestor queries are O(1) via preorder intervals.
class TreeOrder {
public:
    TreeOrder() = default;
    /// parent[root] == root; every other vertex points at its parent.
    TreeOrder(Vertex root, std::vector<Vertex> parent);

    Vertex root() const { return root_; }
    int vertex_count() const { return int(parent_.size()); }
    Vertex parent(Vertex v) const;
    int depth(Vertex v) const;
    const std::vector<Vertex>& children(Vertex v) const;

    /// u <= v in the tree order.
    bool is_below_or_equal(Vertex u, Vertex v) const; // u ancestor-or-self of v
    bool comparable(Vertex u, Vertex v) const;

    Vertex lca(Vertex u, Vertex v) const;

private:
    void check_vertex(Vertex v) const;

    Vertex root_ = 0;
    std::vector<Vertex> parent_;
    std::vector<int> depth_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<int> tin_, tout_;
};

/// DFS spanning tree rooted at `root`, neighbors explored in ascending id
/// order. DFS trees are normal: every graph edge joins comparable vertices.
/// Throws InputError naming an unreached vertex when g is disconnected.
TreeOrder dfs_normal_tree(const Graph& g, Vertex root);

/// Tree of one connected component, on the induced subgraph's dense ids.
/// vertices[i] is the host-graph id of induced vertex i.
struct ComponentTree {
    std::vector<Vertex> vertices;
    Graph subgraph;
    TreeOrder tree;
};

/// One DFS tree per connected component, rooted at the component's smallest id.
std::vector<ComponentTree> dfs_normal_forest(const Graph& g);

/// First edge of g (canonical order) with incomparable endpoints, if any.
std::optional<Edge> find_normality_violation(const Graph& g, const TreeOrder& t);
bool is_normal(const Graph& g, const TreeOrder& t);

/// ⌈A⌉: everything <= some member of a.
VertexSet up_closure(const TreeOrder& t, const VertexSet& a);
/// ⌊A⌋: everything >= some member of a.
VertexSet down_closure(const TreeOrder& t, const VertexSet& a);
/// [A] = ⌈A⌉ ∪ ⌊A⌋.
VertexSet full_closure(const TreeOrder& t, const VertexSet& a);

VertexSet up_closure(const TreeOrder& t, Vertex v);
VertexSet down_closure(const TreeOrder& t, Vertex v);

/// True iff members of a are pairwise incomparable.
bool is_antichain(const TreeOrder& t, const VertexSet& a);

/// S(v): children of v in the tree.
VertexSet successors(const TreeOrder& t, Vertex v);

/// uTv: the unique tree path from u to v, inclusive.
std::vector<Vertex> tree_path(const TreeOrder& t, Vertex u, Vertex v);

} // namespace unfp

#endif
