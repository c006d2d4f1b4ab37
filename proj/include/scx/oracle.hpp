#pragma once

#include <string>
#include <vector>

#include "scx/scheme.hpp"

namespace scx {

/// Tighter facet cap for the brute-force paths.
inline constexpr int kOracleFacetCap = 16;

struct OracleFailure {
    std::string input;
    double expected = 0.0;
    double got = 0.0;
};

struct OracleReport {
    std::string subject;
    int trials = 0;
    double tolerance = 0.0;
    double max_abs_deviation = 0.0;
    std::vector<OracleFailure> failures;

    bool pass() const { return failures.empty(); }
};

/// Brute-force d coefficients: walks the nonempty facet subsets in plain
/// lexicographic list order, recomputing every intersection from scratch
/// and accumulating the signs in integer arithmetic. Shares no code with
/// the incremental path it audits.
CoefficientFamily oracle_d_coefficients(const ComplexPtr& complex,
                                        int facet_cap = kOracleFacetCap);

/// Face-by-face comparison of the two d-coefficient paths.
OracleReport oracle_d_report(const ComplexPtr& complex,
                             int facet_cap = kDefaultFacetCap,
                             int oracle_cap = kOracleFacetCap);

/// Replays the efficiency identity on concrete games: for every carrier
/// game (both variants, every nonempty face) and `trials` seeded random
/// games, sums the individual values directly and compares against the
/// target payoff functional.
OracleReport oracle_characterization(const ComplexPtr& complex,
                                     const CoefficientFamily& target,
                                     const ValueScheme& s, int trials,
                                     std::uint64_t seed, double tol);

/// Spread of the sequential payoff across facet orders: all of them when
/// there are at most num_orders, otherwise num_orders seeded random draws.
OracleReport oracle_order_independence(const Game& v, int num_orders,
                                       std::uint64_t seed);

} // namespace scx
