#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace svcp {

using Vertex = int;

// Fixed-width vertex subset. Set operations on graphs are limited to
// kMaxSetVertices vertices; everything in this toolkit that enumerates
// subsets is far below that.
class VertexSet {
public:
    static constexpr int kMaxSetVertices = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    static VertexSet from_vector(const std::vector<Vertex>& vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    // All of 0..n-1.
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(Vertex v) const {
        return v >= 0 && v < 64 && ((bits_ >> v) & 1U);
    }
    void insert(Vertex v) {
        check(v);
        bits_ |= std::uint64_t{1} << v;
    }
    void erase(Vertex v) {
        check(v);
        bits_ &= ~(std::uint64_t{1} << v);
    }
    VertexSet with(Vertex v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }
    VertexSet without(Vertex v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    // Highest member + 1, or 0 when empty.
    constexpr int span() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    // Lexicographic order on the sorted member lists ({0,1,3} < {0,1,4} < {0,2}).
    static bool lex_less(VertexSet a, VertexSet b) {
        std::uint64_t x = a.bits_, y = b.bits_;
        while (x != 0 && y != 0) {
            int i = std::countr_zero(x), j = std::countr_zero(y);
            if (i != j) return i < j;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;
    }

private:
    static void check(Vertex v) {
        if (v < 0 || v >= kMaxSetVertices) throw std::out_of_range("vertex index outside VertexSet range");
    }

    std::uint64_t bits_ = 0;
};

}  // namespace svcp
