#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scx/game.hpp"
#include "scx/matroid.hpp"

namespace scx {

/// Largest facet count accepted by the subset-enumeration formulas (2^k terms).
inline constexpr int kDefaultFacetCap = 20;

enum class FamilyLabel { generic, probabilistic, traditional, simplicial_d };

std::string to_string(FamilyLabel label);

/// A real weight per nonempty face: the coefficient vector of a linear
/// total-payoff functional. Labels carry the structural constraints:
/// probabilistic families live on facets only, the traditional family is
/// the point mass on the grand coalition of a full simplex.
class CoefficientFamily {
public:
    CoefficientFamily(ComplexPtr complex, std::map<std::uint32_t, double> coeffs,
                      FamilyLabel label);

    const ComplexPtr& complex() const { return complex_; }
    const std::map<std::uint32_t, double>& coeffs() const { return coeffs_; }
    FamilyLabel label() const { return label_; }

    double at(Face t) const {
        auto it = coeffs_.find(t.mask());
        return it == coeffs_.end() ? 0.0 : it->second;
    }

private:
    ComplexPtr complex_;
    std::map<std::uint32_t, double> coeffs_;
    FamilyLabel label_;
};

/// The point mass a_[n] = 1 on a full simplex.
CoefficientFamily traditional_family(ComplexPtr complex);

/// c_F = 1/k on every facet.
CoefficientFamily uniform_probabilistic_family(ComplexPtr complex);

/// Informational properties of a probabilistic family; never enforced.
struct ProbabilisticFlags {
    bool sum_to_one = false;
    bool nonnegative = false;
    bool is_distribution() const { return sum_to_one && nonnegative; }
};

ProbabilisticFlags probabilistic_flags(const CoefficientFamily& c);

/// sum_T a_T v(T) over the family's support.
double generic_payoff(const Game& v, const CoefficientFamily& a);

/// v([n]); defined only on the full simplex.
double traditional_payoff(const Game& v);

/// sum_F c_F v(F) over facets, plus the normalization flags.
struct ProbabilisticPayoff {
    double value = 0.0;
    ProbabilisticFlags flags;
};
ProbabilisticPayoff probabilistic_payoff(const Game& v, const CoefficientFamily& c);

/// Signed count, per face T, of the facet subsets whose intersection is T:
/// each subset of l distinct facets contributes (-1)^(l+1). Faces that are
/// not an intersection of facets are absent; exact-zero aggregates are
/// pruned. Accumulated in integer arithmetic.
CoefficientFamily d_coefficients(const ComplexPtr& complex,
                                 int facet_cap = kDefaultFacetCap);

/// Canonical total payoff: the closed inclusion-exclusion formula over
/// facet intersections, evaluated as generic_payoff against the
/// d-coefficient family.
double simplicial_payoff(const Game& v, int facet_cap = kDefaultFacetCap);

/// Front-to-back evaluation under a facet order: each facet contributes its
/// worth minus the worth of its overlap with the union of its predecessors.
double sequential_payoff(const Game& v, const std::vector<Face>& order);

/// Union of all intersections of (j+1) distinct facets; j = 0 gives the
/// complex itself.
Subcomplex delta_j(const ComplexPtr& complex, int j);

/// Alternating sum of the worths of the delta_j subcomplexes.
double alternating_payoff(const Game& v, int facet_cap = kDefaultFacetCap);

/// Total payoff of a matroid game via a verified shelling: the sum over
/// bases minus the inclusion-exclusion value of each codimension-1
/// attachment subcomplex. At rank 2 the attachments have disjoint facets
/// and the correction degenerates to their plain worth.
double matroid_reduction_payoff(const Game& v, const ShellingOrder& order);

struct FormulaComparison {
    double closed = 0.0;
    std::vector<std::pair<std::string, double>> sequential; // (order id, value)
    double alternating = 0.0;
    std::optional<double> matroid_reduction;
    double max_pairwise_delta = 0.0;
};

/// Evaluates every total-payoff formula side by side: the closed form, the
/// alternating form, the sequential form under the canonical facet order
/// plus seeded random orders, and the shelling reduction when the complex
/// is a matroid whose lex order verifies.
FormulaComparison compare_formulas(const Game& v, int num_random_orders,
                                   std::uint64_t seed,
                                   int facet_cap = kDefaultFacetCap);

} // namespace scx
