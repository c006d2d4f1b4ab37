#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scx/payoff.hpp"

namespace scx {

/// Marginal-contribution weights p[i][T], one real per incidence of a player
/// i with a face T of its link. Sparse with default 0; no sign or
/// normalization constraint. Keys are validated on construction.
class ValueScheme {
public:
    using Key = std::pair<int, std::uint32_t>; // (player, face mask)

    ValueScheme(ComplexPtr complex, std::map<Key, double> entries);

    const ComplexPtr& complex() const { return complex_; }
    const std::map<Key, double>& entries() const { return entries_; }

    double p(int player, Face t) const {
        auto it = entries_.find({player, t.mask()});
        return it == entries_.end() ? 0.0 : it->second;
    }

private:
    ComplexPtr complex_;
    std::map<Key, double> entries_;
};

using GroupValue = std::vector<double>;

/// phi_i(v) = sum over link faces T of p[i][T] (v(T+i) - v(T)).
double phi(const Game& v, const ValueScheme& s, int player);

GroupValue group_value(const Game& v, const ValueScheme& s);

/// The coefficient of v(T) when the sum of the phi_i is expanded and
/// regrouped by coalition: entering contributions minus leaving ones.
CoefficientFamily induced_coefficients(const ValueScheme& s);

struct EfficiencyReport {
    std::string axiom;
    std::map<std::uint32_t, double> residuals; // nonzero entries only
    double max_abs_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Compares the scheme's induced coefficients against a target family,
/// face by face.
EfficiencyReport check_efficiency(const ValueScheme& s,
                                  const CoefficientFamily& target, double tol);

struct SolveResult {
    ValueScheme scheme;
    double residual_norm = 0.0;
};

/// Residual norm at or below this value certifies the target as attainable.
inline constexpr double kFeasibilityThreshold = 1e-8;

/// Builds the minimum-Euclidean-norm least-squares scheme for a target
/// coefficient family, via regularized normal equations on the incidence
/// system. Unknowns are ordered player-ascending then face-ascending, so
/// the solution is reproducible bit for bit.
SolveResult solve_scheme(const ComplexPtr& complex, const CoefficientFamily& target,
                         int facet_cap = kDefaultFacetCap);

struct ConverseCheck {
    bool pass = false;
    std::optional<Face> witness; // first violating face
    double max_abs_deviation = 0.0;
};

/// Re-derives each induced coefficient from actual carrier-game evaluations
/// (difference of the two carrier sums off facets, plain carrier sum on
/// facets) and compares against the target.
ConverseCheck carrier_converse_check(const ValueScheme& s,
                                     const CoefficientFamily& target, double tol);

} // namespace scx
