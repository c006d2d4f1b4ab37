#include "scx/matroid.hpp"

#include <algorithm>

#include "scx/errors.hpp"

namespace scx {

namespace {

bool scan_less(Face a, Face b) {
    const int ca = a.cardinality(), cb = b.cardinality();
    if (ca != cb) return ca < cb;
    return lex_less(b, a);
}

} // namespace

MatroidCheck check_matroid(const ComplexPtr& complex) {
    std::vector<Face> faces = complex->faces();
    std::sort(faces.begin(), faces.end(), scan_less);

    for (Face a : faces) {
        for (Face b : faces) {
            if (b.cardinality() <= a.cardinality()) continue;
            bool extendable = false;
            for (int v : b.minus(a).vertices()) {
                if (complex->contains(a.with(v))) {
                    extendable = true;
                    break;
                }
            }
            if (!extendable) return {false, ExchangeWitness{a, b}};
        }
    }
    return {true, std::nullopt};
}

int rank(const ComplexPtr& complex) {
    if (!complex->is_pure())
        fail(ErrorCode::not_pure, "rank is defined only for pure complexes");
    return complex->facets().front().cardinality();
}

ShellingOrder::ShellingOrder(ComplexPtr complex, std::vector<Face> order)
    : complex_(std::move(complex)), order_(std::move(order)), rank_(scx::rank(complex_)) {
    std::vector<Face> a = order_;
    std::vector<Face> b = complex_->facets();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        fail(ErrorCode::not_a_permutation,
             "order is not a permutation of the facet list");
}

std::vector<Subcomplex> shelling_steps(const ShellingOrder& order) {
    const auto& bases = order.order();
    std::vector<Subcomplex> steps;
    steps.reserve(bases.size() > 0 ? bases.size() - 1 : 0);
    for (std::size_t j = 1; j < bases.size(); ++j) {
        std::vector<Face> prefix(bases.begin(), bases.begin() + static_cast<long>(j));
        Subcomplex partial_union(order.complex(), std::move(prefix));
        steps.push_back(intersect(Subcomplex::simplex_on(order.complex(), bases[j]),
                                  partial_union));
    }
    return steps;
}

ShellingCheck verify_shelling(const ShellingOrder& order) {
    const int want = order.rank() - 1;
    int j = 2;
    for (const Subcomplex& step : shelling_steps(order)) {
        for (Face f : step.facets())
            if (f.cardinality() != want) return {false, j};
        ++j;
    }
    return {true, 0};
}

ShellingOrder shelling_order(const ComplexPtr& complex) {
    MatroidCheck check = check_matroid(complex);
    if (!check.is_matroid)
        fail(ErrorCode::not_a_matroid,
             "exchange axiom fails for ({" + face_key(check.witness->a) + "}, {" +
                 face_key(check.witness->b) + "})");
    std::vector<Face> bases = complex->facets();
    std::sort(bases.begin(), bases.end(), lex_less);
    ShellingOrder order(complex, std::move(bases));
    ShellingCheck verdict = verify_shelling(order);
    if (!verdict.ok)
        fail(ErrorCode::shelling_verification_failed,
             "lexicographic base order fails the codimension-1 condition at step " +
                 std::to_string(verdict.failing_step));
    return order;
}

} // namespace scx
