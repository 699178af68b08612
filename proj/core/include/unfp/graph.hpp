#ifndef UNFP_GRAPH_HPP
#define UNFP_GRAPH_HPP

#include <utility>
#include <vector>

#include "unfp/vertex_set.hpp"

namespace unfp {

/// Degree-class label carried by every vertex. Pure metadata: a truncation of
/// a star has a center of small actual degree but label Infinite.
enum class DegreeClass { Finite, Infinite };

using Edge = std::pair<Vertex, Vertex>; // normalized (min, max)

inline Edge make_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Finite undirected simple graph with dense ids 0..n-1 and per-vertex
/// degree-class labels.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, DegreeClass default_label = DegreeClass::Finite);

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }

    /// Throws InputError on self-loops, duplicates, or out-of-range endpoints.
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    void set_label(Vertex v, DegreeClass c);
    DegreeClass label(Vertex v) const;

    const VertexSet& neighbors(Vertex v) const;
    int degree(Vertex v) const { return neighbors(v).size(); }

    /// Canonical edge list: each edge (min,max), sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_sorted(); }

    VertexSet all_vertices() const { return VertexSet::full(n_); }
    VertexSet finite_vertices() const;
    VertexSet infinite_vertices() const;

    void check_vertex(Vertex v) const;
    void check_subset(const VertexSet& a) const;

private:
    const std::vector<Edge>& edges_sorted() const;

    int n_ = 0;
    std::vector<DegreeClass> labels_;
    std::vector<VertexSet> adj_;
    mutable std::vector<Edge> edges_;
    mutable bool sorted_ = true;
};

/// N(A): vertices outside `a` adjacent to some member of `a`.
VertexSet neighborhood(const Graph& g, const VertexSet& a);

/// G[A] with members of `a` renumbered densely in ascending id order.
Graph induced(const Graph& g, const VertexSet& a);

/// As induced(), also reporting the original id of each new vertex.
std::pair<Graph, std::vector<Vertex>> induced_with_vertices(const Graph& g, const VertexSet& a);

} // namespace unfp

#endif
