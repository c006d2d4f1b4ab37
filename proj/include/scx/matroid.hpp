#pragma once

#include <optional>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

/// A pair of faces violating the independent-set exchange axiom:
/// |a| < |b| but no element of b \ a extends a inside the complex.
struct ExchangeWitness {
    Face a;
    Face b;
};

struct MatroidCheck {
    bool is_matroid = false;
    std::optional<ExchangeWitness> witness; // set iff not a matroid
};

/// Exhaustive exchange-axiom scan over all face pairs. The scan order is
/// fixed (cardinality ascending, vertex-list lex descending, A outer) so the
/// reported witness is deterministic.
MatroidCheck check_matroid(const ComplexPtr& complex);

/// Common facet cardinality of a pure complex.
int rank(const ComplexPtr& complex);

/// A candidate facet ordering B_1..B_k of a pure complex, to be checked
/// against the codimension-1 attachment condition. Construction validates
/// purity and that the order is a permutation of the facet list; it does
/// not validate the shelling condition itself.
class ShellingOrder {
public:
    ShellingOrder(ComplexPtr complex, std::vector<Face> order);

    const ComplexPtr& complex() const { return complex_; }
    const std::vector<Face>& order() const { return order_; }
    int rank() const { return rank_; }

private:
    ComplexPtr complex_;
    std::vector<Face> order_;
    int rank_;
};

struct ShellingCheck {
    bool ok = false;
    /// 1-based index of the first facet whose attachment fails; 0 when ok.
    int failing_step = 0;
};

/// True iff for every j >= 2 each facet of (B_1 u ... u B_{j-1}) n B_j has
/// cardinality rank-1.
ShellingCheck verify_shelling(const ShellingOrder& order);

/// Lexicographic base order of a matroid, verified against the
/// codimension-1 condition before being returned.
ShellingOrder shelling_order(const ComplexPtr& complex);

/// The per-step attachment subcomplexes L_j = (B_1 u ... u B_{j-1}) n B_j
/// for j = 2..k, in order.
std::vector<Subcomplex> shelling_steps(const ShellingOrder& order);

} // namespace scx
