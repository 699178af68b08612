#include "unfp/tree_order.hpp"

#include <algorithm>

namespace unfp {

TreeOrder::TreeOrder(Vertex root, std::vector<Vertex> parent)
    : root_(root), parent_(std::move(parent)) {
    const int n = int(parent_.size());
    if (root_ < 0 || root_ >= n) throw InputError("tree root out of range");
    if (parent_[root_] != root_) throw InputError("root must be its own parent");

    children_.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
        if (v == root_) continue;
        if (parent_[v] < 0 || parent_[v] >= n) throw InputError("parent out of range");
        children_[parent_[v]].push_back(v);
    }
    for (auto& ch : children_) std::sort(ch.begin(), ch.end());

    depth_.assign(n, -1);
    tin_.assign(n, -1);
    tout_.assign(n, -1);
    // iterative preorder; also validates that the parent map reaches everything
    int timer = 0;
    std::vector<std::pair<Vertex, size_t>> stack{{root_, 0}};
    depth_[root_] = 0;
    tin_[root_] = timer++;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < children_[v].size()) {
            Vertex c = children_[v][idx++];
            depth_[c] = depth_[v] + 1;
            tin_[c] = timer++;
            stack.push_back({c, 0});
        } else {
            tout_[v] = timer++;
            stack.pop_back();
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (depth_[v] < 0) throw InputError("parent map does not reach vertex " + std::to_string(v));
}

void TreeOrder::check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_count())
        throw InputError("vertex id " + std::to_string(v) + " not in tree");
}

Vertex TreeOrder::parent(Vertex v) const {
    check_vertex(v);
    return parent_[v];
}

int TreeOrder::depth(Vertex v) const {
    check_vertex(v);
    return depth_[v];
}

const std::vector<Vertex>& TreeOrder::children(Vertex v) const {
    check_vertex(v);
    return children_[v];
}

bool TreeOrder::is_below_or_equal(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return tin_[u] <= tin_[v] && tout_[v] <= tout_[u];
}

bool TreeOrder::comparable(Vertex u, Vertex v) const {
    return is_below_or_equal(u, v) || is_below_or_equal(v, u);
}

Vertex TreeOrder::lca(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    while (!is_below_or_equal(u, v)) u = parent_[u];
    return u;
}

TreeOrder dfs_normal_tree(const Graph& g, Vertex root) {
    g.check_vertex(root);
    const int n = g.vertex_count();
    std::vector<Vertex> parent(n, -1);
    parent[root] = root;

    std::vector<std::vector<Vertex>> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = g.neighbors(v).to_vector();

    std::vector<char> visited(n, 0);
    std::vector<std::pair<Vertex, int>> frames{{root, 0}};
    visited[root] = 1;
    while (!frames.empty()) {
        auto& [v, idx] = frames.back();
        if (idx < int(order[v].size())) {
            Vertex u = order[v][idx++];
            if (!visited[u]) {
                visited[u] = 1;
                parent[u] = v;
                frames.push_back({u, 0});
            }
        } else {
            frames.pop_back();
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (!visited[v])
            throw InputError("graph is disconnected: vertex " + std::to_string(v) +
                             " unreachable from root " + std::to_string(root));
    return TreeOrder(root, std::move(parent));
}

std::vector<ComponentTree> dfs_normal_forest(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<ComponentTree> forest;
    for (Vertex r = 0; r < n; ++r) {
        if (seen[r]) continue;
        VertexSet comp(n);
        std::vector<Vertex> stack{r};
        comp.insert(r);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            g.neighbors(v).for_each([&](Vertex u) {
                if (!comp.contains(u)) {
                    comp.insert(u);
                    stack.push_back(u);
                }
            });
        }
        comp.for_each([&](Vertex v) { seen[v] = 1; });
        auto [h, ids] = induced_with_vertices(g, comp);
        TreeOrder tree = dfs_normal_tree(h, 0); // smallest original id maps to 0
        forest.push_back(ComponentTree{std::move(ids), std::move(h), std::move(tree)});
    }
    return forest;
}

std::optional<Edge> find_normality_violation(const Graph& g, const TreeOrder& t) {
    if (g.vertex_count() != t.vertex_count())
        throw InputError("tree does not span the graph");
    for (const Edge& e : g.edges())
        if (!t.comparable(e.first, e.second)) return e;
    return std::nullopt;
}

bool is_normal(const Graph& g, const TreeOrder& t) {
    return !find_normality_violation(g, t).has_value();
}

VertexSet up_closure(const TreeOrder& t, const VertexSet& a) {
    VertexSet out(t.vertex_count());
    a.for_each([&](Vertex v) {
        Vertex u = v;
        while (true) {
            if (out.contains(u)) break;
            out.insert(u);
            if (u == t.root()) break;
            u = t.parent(u);
        }
    });
    return out;
}

VertexSet down_closure(const TreeOrder& t, const VertexSet& a) {
    VertexSet out(t.vertex_count());
    std::vector<Vertex> stack = a.to_vector();
    for (Vertex v : stack) out.insert(v);
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex c : t.children(v)) {
            if (!out.contains(c)) {
                out.insert(c);
                stack.push_back(c);
            }
        }
    }
    return out;
}

VertexSet full_closure(const TreeOrder& t, const VertexSet& a) {
    return up_closure(t, a) | down_closure(t, a);
}

VertexSet up_closure(const TreeOrder& t, Vertex v) {
    return up_closure(t, VertexSet::of(t.vertex_count(), {v}));
}

VertexSet down_closure(const TreeOrder& t, Vertex v) {
    return down_closure(t, VertexSet::of(t.vertex_count(), {v}));
}

bool is_antichain(const TreeOrder& t, const VertexSet& a) {
    const auto members = a.to_vector();
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (t.comparable(members[i], members[j])) return false;
    return true;
}

VertexSet successors(const TreeOrder& t, Vertex v) {
    VertexSet out(t.vertex_count());
    for (Vertex c : t.children(v)) out.insert(c);
    return out;
}

std::vector<Vertex> tree_path(const TreeOrder& t, Vertex u, Vertex v) {
    Vertex a = t.lca(u, v);
    std::vector<Vertex> up;
    for (Vertex x = u; x != a; x = t.parent(x)) up.push_back(x);
    up.push_back(a);
    std::vector<Vertex> down;
    for (Vertex x = v; x != a; x = t.parent(x)) down.push_back(x);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

} // namespace unfp
