#include "unfp/coloring.hpp"

namespace unfp {

PartialColoring PartialColoring::constant(int universe, int color) {
    PartialColoring c(universe);
    for (Vertex v = 0; v < universe; ++v) c.set_color(v, color);
    return c;
}

int PartialColoring::color(Vertex v) const {
    if (!domain_.contains(v))
        throw InputError("vertex " + std::to_string(v) + " is not colored");
    return bits_.contains(v) ? 1 : 0;
}

void PartialColoring::set_color(Vertex v, int color) {
    if (color != 0 && color != 1) throw InputError("color must be 0 or 1");
    if (frozen_.contains(v) && (bits_.contains(v) ? 1 : 0) != color)
        throw InputError("cannot recolor frozen vertex " + std::to_string(v));
    domain_.insert(v);
    if (color)
        bits_.insert(v);
    else
        bits_.erase(v);
}

void PartialColoring::unset(Vertex v) {
    if (frozen_.contains(v)) throw InputError("cannot uncolor frozen vertex " + std::to_string(v));
    domain_.erase(v);
    bits_.erase(v);
}

void PartialColoring::freeze(Vertex v) {
    if (!domain_.contains(v))
        throw InputError("cannot freeze uncolored vertex " + std::to_string(v));
    frozen_.insert(v);
}

void PartialColoring::freeze(const VertexSet& vs) {
    vs.for_each([&](Vertex v) { freeze(v); });
}

VertexSet PartialColoring::colored(int color) const {
    return color ? (bits_ & domain_) : (domain_ - bits_);
}

PartialColoring PartialColoring::restricted_to(const VertexSet& a) const {
    PartialColoring r(universe());
    r.domain_ = domain_ & a;
    r.bits_ = bits_ & r.domain_;
    r.frozen_ = frozen_ & a;
    return r;
}

void PartialColoring::merge(const PartialColoring& other) {
    other.domain().for_each([&](Vertex v) { set_color(v, other.color(v)); });
    other.frozen().for_each([&](Vertex v) { freeze(v); });
}

VertexSet coloring_diff(const PartialColoring& c, const PartialColoring& d) {
    VertexSet common = c.domain() & d.domain();
    VertexSet out(common.universe());
    common.for_each([&](Vertex v) {
        if (c.color(v) != d.color(v)) out.insert(v);
    });
    return out;
}

PartialColoring flip(const PartialColoring& c, const FlipSet& f) {
    if (!f.is_subset_of(c.domain()))
        throw InputError("flip set leaves the coloring's domain");
    if (f.intersects(c.frozen()))
        throw InputError("flip set touches a frozen vertex");
    PartialColoring out = c;
    f.for_each([&](Vertex v) { out.set_color(v, 1 - c.color(v)); });
    return out;
}

} // namespace unfp
