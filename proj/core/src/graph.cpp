#include "unfp/graph.hpp"

#include <algorithm>

namespace unfp {

Graph::Graph(int n, DegreeClass default_label)
    : n_(n), labels_(n, default_label), adj_(n, VertexSet(n)) {
    if (n < 0) throw InputError("negative vertex count");
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex id " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

void Graph::check_subset(const VertexSet& a) const {
    if (a.universe() != n_) throw InputError("vertex set universe does not match graph");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v))
        throw InputError("duplicate edge [" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + "]");
    adj_[u].insert(v);
    adj_[v].insert(u);
    edges_.push_back(make_edge(u, v));
    sorted_ = false;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
}

void Graph::set_label(Vertex v, DegreeClass c) {
    check_vertex(v);
    labels_[v] = c;
}

DegreeClass Graph::label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
}

const VertexSet& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

const std::vector<Edge>& Graph::edges_sorted() const {
    if (!sorted_) {
        std::sort(edges_.begin(), edges_.end());
        sorted_ = true;
    }
    return edges_;
}

VertexSet Graph::finite_vertices() const {
    VertexSet s(n_);
    for (Vertex v = 0; v < n_; ++v)
        if (labels_[v] == DegreeClass::Finite) s.insert(v);
    return s;
}

VertexSet Graph::infinite_vertices() const {
    VertexSet s(n_);
    for (Vertex v = 0; v < n_; ++v)
        if (labels_[v] == DegreeClass::Infinite) s.insert(v);
    return s;
}

VertexSet neighborhood(const Graph& g, const VertexSet& a) {
    g.check_subset(a);
    VertexSet out(g.vertex_count());
    a.for_each([&](Vertex v) { out |= g.neighbors(v); });
    out -= a;
    return out;
}

std::pair<Graph, std::vector<Vertex>> induced_with_vertices(const Graph& g, const VertexSet& a) {
    g.check_subset(a);
    std::vector<Vertex> members = a.to_vector(); // ascending
    std::vector<int> new_id(g.vertex_count(), -1);
    for (size_t i = 0; i < members.size(); ++i) new_id[members[i]] = int(i);

    Graph h(int(members.size()));
    for (size_t i = 0; i < members.size(); ++i) h.set_label(int(i), g.label(members[i]));
    for (const Edge& e : g.edges()) {
        if (new_id[e.first] >= 0 && new_id[e.second] >= 0)
            h.add_edge(new_id[e.first], new_id[e.second]);
    }
    return {std::move(h), std::move(members)};
}

Graph induced(const Graph& g, const VertexSet& a) {
    return induced_with_vertices(g, a).first;
}

} // namespace unfp
