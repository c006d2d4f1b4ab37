#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace scx {

/// Hard upper bound on the vertex count of any complex.
inline constexpr int kMaxVertices = 24;

/// A coalition: a subset of the vertex set {1,...,n}, packed as a bit mask
/// with vertex v stored in bit v-1. Faces are plain values; they carry no
/// reference to the complex they came from.
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint32_t mask) : mask_(mask) {}

    static Face of(std::initializer_list<int> vertices) {
        std::uint32_t m = 0;
        for (int v : vertices) m |= bit(v);
        return Face(m);
    }

    constexpr std::uint32_t mask() const { return mask_; }
    int cardinality() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }

    constexpr bool contains(int vertex) const { return (mask_ & bit(vertex)) != 0; }
    constexpr bool subset_of(Face other) const { return (mask_ & other.mask_) == mask_; }
    constexpr bool proper_subset_of(Face other) const {
        return mask_ != other.mask_ && subset_of(other);
    }
    constexpr bool disjoint_from(Face other) const { return (mask_ & other.mask_) == 0; }

    constexpr Face unite(Face other) const { return Face(mask_ | other.mask_); }
    constexpr Face intersect(Face other) const { return Face(mask_ & other.mask_); }
    constexpr Face minus(Face other) const { return Face(mask_ & ~other.mask_); }
    constexpr Face with(int vertex) const { return Face(mask_ | bit(vertex)); }
    constexpr Face without(int vertex) const { return Face(mask_ & ~bit(vertex)); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(cardinality()));
        for (std::uint32_t m = mask_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    friend constexpr bool operator==(Face, Face) = default;
    /// Default order is numeric mask order; use lex_less / canonical_facet_less
    /// where the vertex-list order matters.
    friend constexpr auto operator<=>(Face a, Face b) { return a.mask_ <=> b.mask_; }

private:
    static constexpr std::uint32_t bit(int vertex) {
        return std::uint32_t{1} << (vertex - 1);
    }

    std::uint32_t mask_ = 0;
};

/// Lexicographic order on the ascending vertex lists, with a proper prefix
/// sorting before its extensions ({1} < {1,2} < {1,3} < {2}).
inline bool lex_less(Face a, Face b) {
    std::uint32_t x = a.mask(), y = b.mask();
    while (x != 0 && y != 0) {
        const int va = std::countr_zero(x);
        const int vb = std::countr_zero(y);
        if (va != vb) return va < vb;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

/// Canonical facet order: cardinality descending, then lexicographic.
inline bool canonical_facet_less(Face a, Face b) {
    const int ca = a.cardinality(), cb = b.cardinality();
    if (ca != cb) return ca > cb;
    return lex_less(a, b);
}

/// Serialized form: comma-joined ascending vertices, "" for the empty face.
inline std::string face_key(Face f) {
    std::string out;
    for (int v : f.vertices()) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

} // namespace scx
