#ifndef UNFP_COLORING_HPP
#define UNFP_COLORING_HPP

#include "unfp/graph.hpp"

namespace unfp {

/// 2-coloring defined on a vertex subset, with frozen markers. Frozen
/// vertices never change color under any solver; they model a fixed boundary
/// part attached to the instance.
class PartialColoring {
public:
    PartialColoring() = default;
    explicit PartialColoring(int universe)
        : domain_(universe), bits_(universe), frozen_(universe) {}

    /// Total coloring assigning `color` everywhere.
    static PartialColoring constant(int universe, int color);

    int universe() const { return domain_.universe(); }
    const VertexSet& domain() const { return domain_; }
    const VertexSet& frozen() const { return frozen_; }

    bool has(Vertex v) const { return domain_.contains(v); }
    bool is_total() const { return domain_.size() == domain_.universe(); }

    /// Color of a domain vertex; InputError if v is uncolored.
    int color(Vertex v) const;

    void set_color(Vertex v, int color);
    void unset(Vertex v);

    void freeze(Vertex v);
    void freeze(const VertexSet& vs);
    bool is_frozen(Vertex v) const { return frozen_.contains(v); }

    /// Members of the domain colored `color`.
    VertexSet colored(int color) const;

    PartialColoring restricted_to(const VertexSet& a) const;

    /// Copies other's colors into *this; overlapping vertices take other's
    /// color. Frozen markers are unioned.
    void merge(const PartialColoring& other);

    bool operator==(const PartialColoring& o) const {
        return domain_ == o.domain_ && frozen_ == o.frozen_ &&
               (bits_ & domain_) == (o.bits_ & o.domain_);
    }
    bool operator!=(const PartialColoring& o) const { return !(*this == o); }

private:
    VertexSet domain_;
    VertexSet bits_;   // color bit, meaningful only inside domain_
    VertexSet frozen_; // subset of domain_
};

/// c △ c' over the common domain: vertices where both are defined and differ.
VertexSet coloring_diff(const PartialColoring& c, const PartialColoring& d);

/// c*F: colors inverted exactly on f. Requires f ⊆ domain(c), f ∩ frozen = ∅.
PartialColoring flip(const PartialColoring& c, const FlipSet& f);

} // namespace unfp

#endif
