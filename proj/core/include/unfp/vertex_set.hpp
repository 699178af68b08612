#ifndef UNFP_VERTEX_SET_HPP
#define UNFP_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "unfp/errors.hpp"

namespace unfp {

using Vertex = int;

/// Fixed-universe bitset over vertex ids 0..n-1. All solver-side set algebra
/// (closures, flip candidates, domains) runs on these.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<Vertex> vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    void check_range(Vertex v) const {
        if (v < 0 || v >= n_) throw InputError("vertex id " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    bool contains(Vertex v) const {
        if (v < 0 || v >= n_) return false;
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(Vertex v) {
        check_range(v);
        words_[v >> 6] |= uint64_t(1) << (v & 63);
    }
    void erase(Vertex v) {
        check_range(v);
        words_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& o) const {
        same_universe(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        same_universe(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet operator|(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet operator&(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet operator-(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
    VertexSet operator^(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a ^ b; }); }
    VertexSet& operator|=(const VertexSet& o) { return zip_in(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet& operator&=(const VertexSet& o) { return zip_in(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet& operator-=(const VertexSet& o) { return zip_in(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Smallest member, or -1 when empty.
    Vertex first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return Vertex(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(Vertex(i * 64 + b));
                w &= w - 1;
            }
        }
    }

private:
    void same_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw InternalError("VertexSet universe mismatch");
    }
    template <typename Op>
    VertexSet zip(const VertexSet& o, Op op) const {
        same_universe(o);
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
        return r;
    }
    template <typename Op>
    VertexSet& zip_in(const VertexSet& o, Op op) {
        same_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] = op(words_[i], o.words_[i]);
        return *this;
    }

    int n_;
    std::vector<uint64_t> words_;
};

/// Finite vertex sets scheduled for color inversion. Alias: the interesting
/// constraints (finite-degree labels, no frozen members) are enforced at the
/// operations that require them, not by the type.
using FlipSet = VertexSet;

} // namespace unfp

#endif
