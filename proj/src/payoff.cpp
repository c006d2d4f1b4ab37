#include "scx/payoff.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>

#include "scx/errors.hpp"
#include "scx/random.hpp"

namespace scx {

namespace {

/// Kahan compensated accumulator; the alternating inclusion-exclusion sums
/// cancel heavily, so plain summation would shed digits.
class Kahan {
public:
    void add(double x) {
        const double y = x - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

void require_facet_cap(const ComplexPtr& complex, int cap) {
    if (complex->facet_count() > cap)
        fail(ErrorCode::facet_cap_exceeded,
             "complex has " + std::to_string(complex->facet_count()) +
                 " facets, above the cap of " + std::to_string(cap));
}

void require_facet_permutation(const ComplexPtr& complex,
                               const std::vector<Face>& order) {
    std::vector<Face> a = order;
    std::vector<Face> b = complex->facets();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        fail(ErrorCode::not_a_permutation,
             "order is not a permutation of the facet list");
}

} // namespace

std::string to_string(FamilyLabel label) {
    switch (label) {
        case FamilyLabel::generic: return "generic";
        case FamilyLabel::probabilistic: return "probabilistic";
        case FamilyLabel::traditional: return "traditional";
        case FamilyLabel::simplicial_d: return "simplicial";
    }
    return "generic";
}

CoefficientFamily::CoefficientFamily(ComplexPtr complex,
                                     std::map<std::uint32_t, double> coeffs,
                                     FamilyLabel label)
    : complex_(std::move(complex)), coeffs_(std::move(coeffs)), label_(label) {
    for (const auto& [mask, value] : coeffs_) {
        (void)value;
        const Face t(mask);
        if (t.empty())
            fail(ErrorCode::invalid_document, "coefficient on the empty face");
        if (!complex_->contains(t))
            fail(ErrorCode::face_not_in_complex,
                 "coefficient on {" + face_key(t) + "}, which is not a face");
        if (label_ == FamilyLabel::probabilistic && !complex_->is_facet(t))
            fail(ErrorCode::support_not_facets,
                 "probabilistic coefficient on non-facet {" + face_key(t) + "}");
    }
    if (label_ == FamilyLabel::traditional) {
        if (!complex_->is_full_simplex())
            fail(ErrorCode::not_full_simplex,
                 "traditional family requires the full simplex");
        const Face grand = complex_->vertex_set();
        if (coeffs_.size() != 1 || at(grand) != 1.0)
            fail(ErrorCode::invalid_document,
                 "traditional family must be the unit weight on the grand coalition");
    }
}

CoefficientFamily traditional_family(ComplexPtr complex) {
    if (!complex->is_full_simplex())
        fail(ErrorCode::not_full_simplex,
             "traditional family requires the full simplex");
    std::map<std::uint32_t, double> coeffs{{complex->vertex_set().mask(), 1.0}};
    return CoefficientFamily(std::move(complex), std::move(coeffs),
                             FamilyLabel::traditional);
}

CoefficientFamily uniform_probabilistic_family(ComplexPtr complex) {
    std::map<std::uint32_t, double> coeffs;
    const double weight = 1.0 / static_cast<double>(complex->facet_count());
    for (Face f : complex->facets()) coeffs[f.mask()] = weight;
    return CoefficientFamily(std::move(complex), std::move(coeffs),
                             FamilyLabel::probabilistic);
}

ProbabilisticFlags probabilistic_flags(const CoefficientFamily& c) {
    Kahan sum;
    bool nonnegative = true;
    for (const auto& [mask, value] : c.coeffs()) {
        (void)mask;
        sum.add(value);
        if (value < 0.0) nonnegative = false;
    }
    return {std::abs(sum.value() - 1.0) <= 1e-12, nonnegative};
}

double generic_payoff(const Game& v, const CoefficientFamily& a) {
    require_same_complex(v, a.complex(), "payoff");
    Kahan acc;
    for (const auto& [mask, coeff] : a.coeffs())
        acc.add(coeff * v.evaluate(Face(mask)));
    return acc.value();
}

double traditional_payoff(const Game& v) {
    if (!v.complex()->is_full_simplex())
        fail(ErrorCode::not_full_simplex,
             "the grand coalition is not feasible on this complex");
    return v.evaluate(v.complex()->vertex_set());
}

ProbabilisticPayoff probabilistic_payoff(const Game& v, const CoefficientFamily& c) {
    require_same_complex(v, c.complex(), "payoff");
    for (const auto& [mask, value] : c.coeffs()) {
        (void)value;
        if (!v.complex()->is_facet(Face(mask)))
            fail(ErrorCode::support_not_facets,
                 "coefficient on non-facet {" + face_key(Face(mask)) + "}");
    }
    Kahan acc;
    for (const auto& [mask, coeff] : c.coeffs())
        acc.add(coeff * v.evaluate(Face(mask)));
    return {acc.value(), probabilistic_flags(c)};
}

CoefficientFamily d_coefficients(const ComplexPtr& complex, int facet_cap) {
    require_facet_cap(complex, facet_cap);
    const auto& facets = complex->facets();
    const int k = static_cast<int>(facets.size());

    // Incremental intersections over the subset lattice of the facet list:
    // inter[m] = intersection of the facets selected by m.
    std::vector<std::uint32_t> inter(std::size_t{1} << k, 0);
    std::map<std::uint32_t, long long> signed_counts;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << k); ++m) {
        const std::uint32_t low = m & (0u - m);
        const std::uint32_t rest = m ^ low;
        const std::uint32_t facet = facets[static_cast<std::size_t>(
                                               std::countr_zero(low))]
                                        .mask();
        inter[m] = rest == 0 ? facet : (inter[rest] & facet);
        if (inter[m] == 0) continue;
        signed_counts[inter[m]] += (std::popcount(m) & 1) ? +1 : -1;
    }

    std::map<std::uint32_t, double> coeffs;
    for (const auto& [mask, count] : signed_counts)
        if (count != 0) coeffs[mask] = static_cast<double>(count);
    return CoefficientFamily(complex, std::move(coeffs), FamilyLabel::simplicial_d);
}

double simplicial_payoff(const Game& v, int facet_cap) {
    return generic_payoff(v, d_coefficients(v.complex(), facet_cap));
}

double sequential_payoff(const Game& v, const std::vector<Face>& order) {
    const ComplexPtr& complex = v.complex();
    require_facet_permutation(complex, order);
    Kahan acc;
    for (std::size_t j = 0; j < order.size(); ++j) {
        acc.add(v.evaluate(order[j]));
        if (j == 0) continue;
        std::vector<Face> prefix(order.begin(), order.begin() + static_cast<long>(j));
        Subcomplex overlap = intersect(Subcomplex::simplex_on(complex, order[j]),
                                       Subcomplex(complex, std::move(prefix)));
        acc.add(-complex_worth(v, overlap));
    }
    return acc.value();
}

Subcomplex delta_j(const ComplexPtr& complex, int j) {
    const auto& facets = complex->facets();
    const int k = static_cast<int>(facets.size());
    if (j < 0 || j >= k)
        fail(ErrorCode::index_out_of_range,
             "delta index " + std::to_string(j) + " outside 0.." + std::to_string(k - 1));
    if (j == 0) return Subcomplex::whole(complex);

    // All intersections of j+1 distinct facets, via the standard
    // ascending-index combination walk.
    const int l = j + 1;
    std::vector<int> idx(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<Face> pieces;
    while (true) {
        Face inter = facets[static_cast<std::size_t>(idx[0])];
        for (int i = 1; i < l; ++i)
            inter = inter.intersect(facets[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
        if (!inter.empty()) pieces.push_back(inter);

        int i = l - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - l + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < l; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    if (pieces.empty()) return Subcomplex::empty(complex);
    return Subcomplex(complex, std::move(pieces));
}

double alternating_payoff(const Game& v, int facet_cap) {
    const ComplexPtr& complex = v.complex();
    require_facet_cap(complex, facet_cap);
    Kahan acc;
    for (int j = 0; j < complex->facet_count(); ++j) {
        Subcomplex level = delta_j(complex, j);
        if (level.is_empty()) continue;
        const double worth = complex_worth(v, level);
        acc.add((j & 1) ? -worth : worth);
    }
    return acc.value();
}

namespace {

/// Inclusion-exclusion value of a subcomplex, scanned directly over its own
/// facet list. The facet-worth sum would double count wherever the facets
/// overlap; the overlaps only vanish when the facets are disjoint (e.g. the
/// codimension-1 attachments of a rank-2 matroid).
double attachment_value(const Game& v, const Subcomplex& k) {
    const auto& facets = k.facets();
    const int m = static_cast<int>(facets.size());
    Kahan acc;
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << m); ++pick) {
        Face inter = facets[static_cast<std::size_t>(std::countr_zero(pick))];
        for (std::uint32_t rest = pick & (pick - 1); rest != 0; rest &= rest - 1)
            inter = inter.intersect(
                facets[static_cast<std::size_t>(std::countr_zero(rest))]);
        if (inter.empty()) continue;
        const double term = v.evaluate(inter);
        acc.add((std::popcount(pick) & 1) ? term : -term);
    }
    return acc.value();
}

} // namespace

double matroid_reduction_payoff(const Game& v, const ShellingOrder& order) {
    if (!same_complex(v.complex(), order.complex()))
        fail(ErrorCode::complex_mismatch,
             "shelling order belongs to a different complex");
    ShellingCheck verdict = verify_shelling(order);
    if (!verdict.ok)
        fail(ErrorCode::shelling_verification_failed,
             "order fails the codimension-1 condition at step " +
                 std::to_string(verdict.failing_step));
    Kahan acc;
    for (Face basis : order.order()) acc.add(v.evaluate(basis));
    for (const Subcomplex& step : shelling_steps(order))
        acc.add(-attachment_value(v, step));
    return acc.value();
}

FormulaComparison compare_formulas(const Game& v, int num_random_orders,
                                   std::uint64_t seed, int facet_cap) {
    const ComplexPtr& complex = v.complex();
    FormulaComparison out;
    out.closed = simplicial_payoff(v, facet_cap);
    out.alternating = alternating_payoff(v, facet_cap);
    out.sequential.emplace_back("canonical", sequential_payoff(v, complex->facets()));

    Rng rng(seed);
    const int k = complex->facet_count();
    for (int t = 0; t < num_random_orders; ++t) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        rng.shuffle(idx);
        std::vector<Face> order;
        order.reserve(static_cast<std::size_t>(k));
        std::string id = "order:";
        for (int i : idx) {
            order.push_back(complex->facets()[static_cast<std::size_t>(i)]);
            if (id.size() > 6) id += ',';
            id += std::to_string(i);
        }
        out.sequential.emplace_back(std::move(id), sequential_payoff(v, order));
    }

    if (k == 1) {
        // single facet: the reduction is trivially the facet's worth
        out.matroid_reduction = v.evaluate(complex->facets().front());
    } else if (check_matroid(complex).is_matroid) {
        try {
            out.matroid_reduction = matroid_reduction_payoff(v, shelling_order(complex));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::shelling_verification_failed) throw;
        }
    }

    std::vector<double> values{out.closed, out.alternating};
    for (const auto& [id, value] : out.sequential) {
        (void)id;
        values.push_back(value);
    }
    if (out.matroid_reduction) values.push_back(*out.matroid_reduction);
    double delta = 0.0;
    for (double x : values)
        for (double y : values) delta = std::max(delta, std::abs(x - y));
    out.max_pairwise_delta = delta;
    return out;
}

} // namespace scx
