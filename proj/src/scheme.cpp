#include "scx/scheme.hpp"

#include <algorithm>
#include <cmath>

#include "scx/errors.hpp"

namespace scx {

namespace {

void require_same_family_complex(const ValueScheme& s, const CoefficientFamily& target) {
    if (!same_complex(s.complex(), target.complex()))
        fail(ErrorCode::complex_mismatch,
             "scheme and coefficient family live on different complexes");
}

} // namespace

ValueScheme::ValueScheme(ComplexPtr complex, std::map<Key, double> entries)
    : complex_(std::move(complex)), entries_(std::move(entries)) {
    for (const auto& [key, value] : entries_) {
        (void)value;
        const auto& [player, mask] = key;
        const Face t(mask);
        if (player < 1 || player > complex_->vertex_count())
            fail(ErrorCode::vertex_out_of_range,
                 "scheme entry for player " + std::to_string(player));
        if (t.contains(player) || !complex_->contains(t.with(player)))
            fail(ErrorCode::entry_not_in_link,
                 "scheme entry ({" + face_key(t) + "}, player " +
                     std::to_string(player) + ") is not in the player's link");
    }
}

double phi(const Game& v, const ValueScheme& s, int player) {
    require_same_complex(v, s.complex(), "phi");
    if (player < 1 || player > s.complex()->vertex_count())
        fail(ErrorCode::vertex_out_of_range, "player " + std::to_string(player));
    double acc = 0.0;
    const auto begin = s.entries().lower_bound({player, 0});
    const auto end = s.entries().lower_bound({player + 1, 0});
    for (auto it = begin; it != end; ++it) {
        const Face t(it->first.second);
        acc += it->second * (v.evaluate(t.with(player)) - v.evaluate(t));
    }
    return acc;
}

GroupValue group_value(const Game& v, const ValueScheme& s) {
    GroupValue out(static_cast<std::size_t>(s.complex()->vertex_count()), 0.0);
    for (int i = 1; i <= s.complex()->vertex_count(); ++i)
        out[static_cast<std::size_t>(i - 1)] = phi(v, s, i);
    return out;
}

CoefficientFamily induced_coefficients(const ValueScheme& s) {
    // Every entry p[i][T] moves weight +p onto T+i and -p off T.
    std::map<std::uint32_t, double> coeff;
    for (const auto& [key, p] : s.entries()) {
        const auto& [player, mask] = key;
        const Face t(mask);
        coeff[t.with(player).mask()] += p;
        if (!t.empty()) coeff[mask] -= p;
    }
    for (auto it = coeff.begin(); it != coeff.end();)
        it = (it->second == 0.0) ? coeff.erase(it) : std::next(it);
    return CoefficientFamily(s.complex(), std::move(coeff), FamilyLabel::generic);
}

EfficiencyReport check_efficiency(const ValueScheme& s,
                                  const CoefficientFamily& target, double tol) {
    require_same_family_complex(s, target);
    const CoefficientFamily induced = induced_coefficients(s);

    // Residuals vanish off the union of the two supports.
    std::map<std::uint32_t, double> residuals;
    for (const auto& [mask, value] : induced.coeffs()) residuals[mask] = value;
    for (const auto& [mask, value] : target.coeffs()) residuals[mask] -= value;
    double max_abs = 0.0;
    for (auto it = residuals.begin(); it != residuals.end();) {
        max_abs = std::max(max_abs, std::abs(it->second));
        it = (it->second == 0.0) ? residuals.erase(it) : std::next(it);
    }
    return {to_string(target.label()), std::move(residuals), max_abs, tol,
            max_abs <= tol};
}

namespace {

/// Incidence columns in canonical order: player ascending, link face
/// ascending by mask.
std::vector<ValueScheme::Key> incidence_columns(const ComplexPtr& complex) {
    std::vector<ValueScheme::Key> cols;
    for (int i = 1; i <= complex->vertex_count(); ++i)
        for (Face t : complex->link_vertex(i)) cols.push_back({i, t.mask()});
    return cols;
}

/// Cholesky solve of a symmetric positive-definite system, in place.
std::vector<double> spd_solve(std::vector<double> m, std::vector<double> rhs,
                              std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = m[i * dim + j];
            for (std::size_t t = 0; t < j; ++t)
                sum -= m[i * dim + t] * m[j * dim + t];
            if (i == j) {
                m[i * dim + i] = std::sqrt(sum);
            } else {
                m[i * dim + j] = sum / m[j * dim + j];
            }
        }
    }
    // forward then backward substitution
    for (std::size_t i = 0; i < dim; ++i) {
        double sum = rhs[i];
        for (std::size_t t = 0; t < i; ++t) sum -= m[i * dim + t] * rhs[t];
        rhs[i] = sum / m[i * dim + i];
    }
    for (std::size_t ii = dim; ii > 0; --ii) {
        const std::size_t i = ii - 1;
        double sum = rhs[i];
        for (std::size_t t = i + 1; t < dim; ++t) sum -= m[t * dim + i] * rhs[t];
        rhs[i] = sum / m[i * dim + i];
    }
    return rhs;
}

} // namespace

SolveResult solve_scheme(const ComplexPtr& complex, const CoefficientFamily& target,
                         int facet_cap) {
    if (complex->facet_count() > facet_cap)
        fail(ErrorCode::facet_cap_exceeded,
             "complex has " + std::to_string(complex->facet_count()) +
                 " facets, above the cap of " + std::to_string(facet_cap));
    if (!same_complex(complex, target.complex()))
        fail(ErrorCode::complex_mismatch,
             "coefficient family lives on a different complex");

    // Equations: one per nonempty face. Each unknown p[i][T] enters the
    // equation of T+i with +1 and the one of T with -1.
    std::vector<Face> rows;
    for (Face f : complex->faces())
        if (!f.empty()) rows.push_back(f);
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r].mask()] = r;

    const std::vector<ValueScheme::Key> cols = incidence_columns(complex);
    const std::size_t m = rows.size();
    const std::size_t q = cols.size();

    std::vector<double> a(m * q, 0.0);
    for (std::size_t c = 0; c < q; ++c) {
        const auto& [player, mask] = cols[c];
        const Face t(mask);
        a[row_of.at(t.with(player).mask()) * q + c] += 1.0;
        if (!t.empty()) a[row_of.at(mask) * q + c] -= 1.0;
    }

    std::vector<double> b(m, 0.0);
    for (std::size_t r = 0; r < m; ++r) b[r] = target.at(rows[r]);

    // Minimum-norm solution x = A^T y with (A A^T + lambda I) y = b.
    constexpr double lambda = 1e-12;
    std::vector<double> gram(m * m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s <= r; ++s) {
            double sum = 0.0;
            for (std::size_t c = 0; c < q; ++c) sum += a[r * q + c] * a[s * q + c];
            gram[r * m + s] = sum;
            gram[s * m + r] = sum;
        }
        gram[r * m + r] += lambda;
    }
    const std::vector<double> y = spd_solve(std::move(gram), b, m);

    std::vector<double> x(q, 0.0);
    for (std::size_t c = 0; c < q; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < m; ++r) sum += a[r * q + c] * y[r];
        x[c] = sum;
    }

    double residual_sq = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
        double ax = 0.0;
        for (std::size_t c = 0; c < q; ++c) ax += a[r * q + c] * x[c];
        const double diff = ax - target.at(rows[r]);
        residual_sq += diff * diff;
    }

    std::map<ValueScheme::Key, double> entries;
    for (std::size_t c = 0; c < q; ++c)
        if (x[c] != 0.0) entries[cols[c]] = x[c];
    return {ValueScheme(complex, std::move(entries)), std::sqrt(residual_sq)};
}

ConverseCheck carrier_converse_check(const ValueScheme& s,
                                     const CoefficientFamily& target, double tol) {
    require_same_family_complex(s, target);
    const ComplexPtr& complex = s.complex();

    const auto sum_phi = [&](const Game& g) {
        double total = 0.0;
        for (int i = 1; i <= complex->vertex_count(); ++i) total += phi(g, s, i);
        return total;
    };

    ConverseCheck out;
    out.pass = true;
    for (Face t : complex->faces()) {
        if (t.empty()) continue;
        double lhs;
        if (complex->is_facet(t)) {
            lhs = sum_phi(carrier_game(t, complex, false));
        } else {
            lhs = sum_phi(carrier_game(t, complex, false)) -
                  sum_phi(carrier_game(t, complex, true));
        }
        const double deviation = std::abs(lhs - target.at(t));
        out.max_abs_deviation = std::max(out.max_abs_deviation, deviation);
        if (deviation > tol && out.pass) {
            out.pass = false;
            out.witness = t;
        }
    }
    return out;
}

} // namespace scx
