#include "scx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "scx/errors.hpp"
#include "scx/random.hpp"

namespace scx {

namespace {

void subsets_in_lex_order(int k, std::vector<int>& chosen,
                          const std::function<void(const std::vector<int>&)>& visit,
                          int next) {
    for (int i = next; i < k; ++i) {
        chosen.push_back(i);
        visit(chosen);
        subsets_in_lex_order(k, chosen, visit, i + 1);
        chosen.pop_back();
    }
}

} // namespace

CoefficientFamily oracle_d_coefficients(const ComplexPtr& complex, int facet_cap) {
    const auto& facets = complex->facets();
    const int k = static_cast<int>(facets.size());
    if (k > facet_cap)
        fail(ErrorCode::facet_cap_exceeded,
             "complex has " + std::to_string(k) + " facets, above the oracle cap of " +
                 std::to_string(facet_cap));

    std::map<std::uint32_t, long long> signed_counts;
    std::vector<int> chosen;
    subsets_in_lex_order(
        k, chosen,
        [&](const std::vector<int>& subset) {
            Face inter = complex->vertex_set();
            for (int i : subset) inter = inter.intersect(facets[static_cast<std::size_t>(i)]);
            if (inter.empty()) return;
            signed_counts[inter.mask()] += (subset.size() % 2 == 1) ? +1 : -1;
        },
        0);

    std::map<std::uint32_t, double> coeffs;
    for (const auto& [mask, count] : signed_counts)
        if (count != 0) coeffs[mask] = static_cast<double>(count);
    return CoefficientFamily(complex, std::move(coeffs), FamilyLabel::simplicial_d);
}

OracleReport oracle_d_report(const ComplexPtr& complex, int facet_cap, int oracle_cap) {
    const CoefficientFamily main = d_coefficients(complex, facet_cap);
    const CoefficientFamily brute = oracle_d_coefficients(complex, oracle_cap);

    OracleReport report{"d-coefficients", 1, 0.0, 0.0, {}};
    std::map<std::uint32_t, std::pair<double, double>> merged; // expected, got
    for (const auto& [mask, value] : brute.coeffs()) merged[mask].first = value;
    for (const auto& [mask, value] : main.coeffs()) merged[mask].second = value;
    for (const auto& [mask, pair] : merged) {
        const auto& [expected, got] = pair;
        const double deviation = std::abs(expected - got);
        report.max_abs_deviation = std::max(report.max_abs_deviation, deviation);
        if (deviation > 0.0)
            report.failures.push_back({"face:" + face_key(Face(mask)), expected, got});
    }
    return report;
}

OracleReport oracle_characterization(const ComplexPtr& complex,
                                     const CoefficientFamily& target,
                                     const ValueScheme& s, int trials,
                                     std::uint64_t seed, double tol) {
    if (!same_complex(complex, target.complex()) || !same_complex(complex, s.complex()))
        fail(ErrorCode::complex_mismatch,
             "oracle inputs live on different complexes");

    OracleReport report{"characterization", trials, tol, 0.0, {}};

    const auto run = [&](const Game& game, const std::string& descriptor) {
        // direct value sum over the full link of every player
        double lhs = 0.0;
        for (int i = 1; i <= complex->vertex_count(); ++i)
            for (Face t : complex->link_vertex(i))
                lhs += s.p(i, t) * (game.evaluate(t.with(i)) - game.evaluate(t));
        // target payoff as a plain dot product over the family support
        double rhs = 0.0;
        for (const auto& [mask, coeff] : target.coeffs())
            rhs += coeff * game.evaluate(Face(mask));

        const double deviation = std::abs(lhs - rhs);
        report.max_abs_deviation = std::max(report.max_abs_deviation, deviation);
        if (deviation > tol) report.failures.push_back({descriptor, rhs, lhs});
    };

    for (Face t : complex->faces()) {
        if (t.empty()) continue;
        run(carrier_game(t, complex, false), "carrier:" + face_key(t));
        run(carrier_game(t, complex, true), "strict-carrier:" + face_key(t));
    }
    for (int trial = 0; trial < trials; ++trial)
        run(random_game(complex, seed + static_cast<std::uint64_t>(trial), -1.0, 1.0),
            "random:" + std::to_string(trial));
    return report;
}

OracleReport oracle_order_independence(const Game& v, int num_orders,
                                       std::uint64_t seed) {
    if (num_orders < 1)
        fail(ErrorCode::invalid_document, "at least one facet order is required");
    const ComplexPtr& complex = v.complex();
    const int k = complex->facet_count();

    // Enumerate every order when that is no more work than sampling.
    long long total_orders = 1;
    bool exhaustive = true;
    for (int i = 2; i <= k; ++i) {
        total_orders *= i;
        if (total_orders > num_orders) {
            exhaustive = false;
            break;
        }
    }

    std::vector<std::pair<std::string, double>> evaluated;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;

    const auto evaluate_order = [&](const std::vector<int>& perm) {
        std::vector<Face> order;
        order.reserve(static_cast<std::size_t>(k));
        std::string id = "order:";
        for (int i : perm) {
            order.push_back(complex->facets()[static_cast<std::size_t>(i)]);
            if (id.size() > 6) id += ',';
            id += std::to_string(i);
        }
        evaluated.emplace_back(std::move(id), sequential_payoff(v, order));
    };

    if (exhaustive) {
        do {
            evaluate_order(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
    } else {
        Rng rng(seed);
        for (int t = 0; t < num_orders; ++t) {
            std::vector<int> perm = idx;
            rng.shuffle(perm);
            evaluate_order(perm);
        }
    }

    OracleReport report{"order-independence", static_cast<int>(evaluated.size()),
                        1e-12, 0.0, {}};
    double lo = evaluated.front().second, hi = lo;
    for (const auto& [id, value] : evaluated) {
        (void)id;
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    report.max_abs_deviation = hi - lo;
    for (const auto& [id, value] : evaluated)
        if (value - lo > report.tolerance) report.failures.push_back({id, lo, value});
    return report;
}

} // namespace scx
