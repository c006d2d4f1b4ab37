#include "scx/complex.hpp"

#include <algorithm>

#include "scx/errors.hpp"

namespace scx {

std::vector<Face> antichain_normalize(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), canonical_facet_less);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    std::vector<Face> kept;
    for (Face f : faces) {
        bool absorbed = false;
        for (Face g : kept) {
            if (f.subset_of(g)) { // g has >= cardinality, equality already deduped
                absorbed = true;
                break;
            }
        }
        if (!absorbed) kept.push_back(f);
    }
    if (kept.empty()) kept.push_back(Face{});
    return kept;
}

ComplexPtr Complex::from_facet_masks(int n, std::vector<Face> generators) {
    if (n < 1 || n > kMaxVertices)
        fail(ErrorCode::capacity_exceeded,
             "vertex count " + std::to_string(n) + " outside 1.." +
                 std::to_string(kMaxVertices));
    if (generators.empty())
        fail(ErrorCode::empty_facet_list, "facet list is empty");
    const Face universe((std::uint32_t{1} << n) - 1);
    for (Face f : generators) {
        if (!f.subset_of(universe))
            fail(ErrorCode::vertex_out_of_range,
                 "facet {" + face_key(f) + "} has a vertex outside 1.." +
                     std::to_string(n));
    }
    auto facets = antichain_normalize(std::move(generators));
    return ComplexPtr(new Complex(n, std::move(facets)));
}

ComplexPtr Complex::from_facets(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<Face> generators;
    generators.reserve(sets.size());
    for (const auto& set : sets) {
        std::uint32_t mask = 0;
        for (int v : set) {
            if (v < 1 || v > kMaxVertices)
                fail(ErrorCode::vertex_out_of_range,
                     "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            mask |= std::uint32_t{1} << (v - 1);
        }
        generators.emplace_back(mask);
    }
    return from_facet_masks(n, std::move(generators));
}

ComplexPtr Complex::full_simplex(int n) {
    if (n < 1 || n > kMaxVertices)
        fail(ErrorCode::capacity_exceeded,
             "vertex count " + std::to_string(n) + " outside 1.." +
                 std::to_string(kMaxVertices));
    return from_facet_masks(n, {Face((std::uint32_t{1} << n) - 1)});
}

const std::vector<Face>& Complex::faces() const {
    std::call_once(faces_once_, [this] {
        std::vector<Face> out;
        for (Face facet : facets_) {
            // all submasks of the facet, including 0
            std::uint32_t sub = facet.mask();
            while (true) {
                out.emplace_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & facet.mask();
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        faces_ = std::move(out);
    });
    return faces_;
}

bool Complex::contains(Face f) const {
    for (Face facet : facets_)
        if (f.subset_of(facet)) return true;
    return false;
}

bool Complex::is_facet(Face f) const {
    return std::find(facets_.begin(), facets_.end(), f) != facets_.end();
}

bool Complex::is_pure() const {
    const int c = facets_.front().cardinality();
    for (Face f : facets_)
        if (f.cardinality() != c) return false;
    return true;
}

int Complex::dimension() const {
    return facets_.front().cardinality() - 1; // canonical order: largest first
}

bool Complex::is_full_simplex() const {
    return facets_.size() == 1 && facets_[0] == vertex_set();
}

void Complex::require_face(Face f, const char* op) const {
    if (!contains(f))
        fail(ErrorCode::face_not_in_complex,
             std::string(op) + ": {" + face_key(f) + "} is not a face");
}

std::vector<Face> Complex::link_vertex(int i) const {
    if (i < 1 || i > n_)
        fail(ErrorCode::vertex_out_of_range,
             "vertex " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    std::vector<Face> out;
    for (Face t : faces())
        if (!t.contains(i) && contains(t.with(i))) out.push_back(t);
    return out;
}

std::vector<Face> Complex::link_face(Face s) const {
    require_face(s, "link");
    std::vector<Face> out;
    for (Face t : faces())
        if (t.disjoint_from(s) && contains(t.unite(s))) out.push_back(t);
    return out;
}

std::vector<Face> Complex::star_face(Face s) const {
    require_face(s, "star");
    std::vector<Face> out;
    for (Face a : faces())
        if (contains(a.unite(s))) out.push_back(a);
    return out;
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Subcomplex::Subcomplex(ComplexPtr parent, std::vector<Face> generators)
    : parent_(std::move(parent)) {
    for (Face f : generators) {
        if (!parent_->contains(f))
            fail(ErrorCode::face_not_in_complex,
                 "subcomplex generator {" + face_key(f) + "} is not a face of the parent");
    }
    facets_ = antichain_normalize(std::move(generators));
}

Subcomplex Subcomplex::simplex_on(ComplexPtr parent, Face f) {
    return Subcomplex(std::move(parent), {f});
}

Subcomplex Subcomplex::whole(ComplexPtr parent) {
    auto facets = parent->facets();
    return Subcomplex(std::move(parent), std::move(facets));
}

Subcomplex Subcomplex::empty(ComplexPtr parent) {
    return Subcomplex(std::move(parent), {Face{}});
}

namespace {

void require_same_parent(const Subcomplex& a, const Subcomplex& b) {
    if (!same_complex(a.parent(), b.parent()))
        fail(ErrorCode::parent_mismatch, "subcomplexes have different parents");
}

} // namespace

Subcomplex unite(const Subcomplex& a, const Subcomplex& b) {
    require_same_parent(a, b);
    std::vector<Face> merged = a.facets();
    merged.insert(merged.end(), b.facets().begin(), b.facets().end());
    return Subcomplex(a.parent(), std::move(merged));
}

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b) {
    require_same_parent(a, b);
    std::vector<Face> pairwise;
    pairwise.reserve(a.facets().size() * b.facets().size());
    for (Face fa : a.facets())
        for (Face fb : b.facets()) pairwise.push_back(fa.intersect(fb));
    return Subcomplex(a.parent(), std::move(pairwise));
}

} // namespace scx
