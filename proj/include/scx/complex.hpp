#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "scx/face.hpp"

namespace scx {

class Complex;
using ComplexPtr = std::shared_ptr<const Complex>;

/// A finite simplicial complex on the vertex set {1,...,n}, stored by its
/// facet antichain in canonical order (cardinality descending, then lex).
/// Instances are immutable and always heap-allocated behind a shared_ptr,
/// so every dependent object (games, subcomplexes, schemes) can hold a
/// cheap handle. The face list is materialized lazily, once.
class Complex {
public:
    /// Builds the complex generated by the given vertex sets. Sets contained
    /// in others are absorbed and duplicates dropped.
    static ComplexPtr from_facets(int n, const std::vector<std::vector<int>>& sets);
    static ComplexPtr from_facet_masks(int n, std::vector<Face> generators);
    static ComplexPtr full_simplex(int n);

    int vertex_count() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    /// All faces including the empty face, in ascending mask order.
    const std::vector<Face>& faces() const;
    std::size_t face_count() const { return faces().size(); }

    bool contains(Face f) const;
    bool is_facet(Face f) const;
    bool is_pure() const;
    /// Max facet cardinality minus one.
    int dimension() const;
    bool is_full_simplex() const;
    Face vertex_set() const { return Face((std::uint32_t{1} << n_) - 1); }

    /// Faces T with i not in T and T+i feasible.
    std::vector<Face> link_vertex(int i) const;
    /// Faces T disjoint from S with T+S feasible. S must be a face.
    std::vector<Face> link_face(Face s) const;
    /// Faces contained in some face that contains S. S must be a face.
    std::vector<Face> star_face(Face s) const;

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

    Complex(const Complex&) = delete;
    Complex& operator=(const Complex&) = delete;

private:
    Complex(int n, std::vector<Face> facets)
        : n_(n), facets_(std::move(facets)) {}

    void require_face(Face f, const char* op) const;

    int n_;
    std::vector<Face> facets_;
    mutable std::once_flag faces_once_;
    mutable std::vector<Face> faces_;
};

bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

/// Sorts, deduplicates and drops faces contained in other faces.
/// An empty result collapses to {empty face}.
std::vector<Face> antichain_normalize(std::vector<Face> faces);

/// A subcomplex of a parent complex, stored by its facet antichain.
/// The empty subcomplex is represented by the single facet {} so its
/// worth under any game is v({}) = 0.
class Subcomplex {
public:
    Subcomplex(ComplexPtr parent, std::vector<Face> generators);

    /// The full simplex on the vertices of a single face.
    static Subcomplex simplex_on(ComplexPtr parent, Face f);
    static Subcomplex whole(ComplexPtr parent);
    static Subcomplex empty(ComplexPtr parent);

    const ComplexPtr& parent() const { return parent_; }
    const std::vector<Face>& facets() const { return facets_; }
    bool is_empty() const { return facets_.size() == 1 && facets_[0].empty(); }

    friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
        return same_complex(a.parent_, b.parent_) && a.facets_ == b.facets_;
    }

private:
    ComplexPtr parent_;
    std::vector<Face> facets_;
};

Subcomplex unite(const Subcomplex& a, const Subcomplex& b);
Subcomplex intersect(const Subcomplex& a, const Subcomplex& b);

} // namespace scx
