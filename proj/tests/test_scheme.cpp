#include <doctest.h>

#include <cmath>

#include "scx/errors.hpp"
#include "test_support.hpp"

using namespace scx;
using scx::testing::fixture_complex;
using scx::testing::random_generic_family;
using scx::testing::random_scheme;

namespace {

/// Exact symmetric weights on the full simplex: |T|! (n-1-|T|)! / n!,
/// built from integer factorials so each weight is one rounded rational.
ValueScheme shapley_scheme(const ComplexPtr& full) {
    const int n = full->vertex_count();
    long long factorial[16];
    factorial[0] = 1;
    for (int i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;

    std::map<ValueScheme::Key, double> entries;
    for (int i = 1; i <= n; ++i) {
        for (Face t : full->link_vertex(i)) {
            const int size = t.cardinality();
            entries[{i, t.mask()}] =
                static_cast<double>(factorial[size] * factorial[n - 1 - size]) /
                static_cast<double>(factorial[n]);
        }
    }
    return ValueScheme(full, std::move(entries));
}

ValueScheme zero_scheme(const ComplexPtr& complex) {
    return ValueScheme(complex, {});
}

double sum_of(const GroupValue& values) {
    double total = 0.0;
    for (double x : values) total += x;
    return total;
}

} // namespace

TEST_SUITE("scheme") {

TEST_CASE("scheme entries must sit in the player's link") {
    auto two = fixture_complex("two-facet");
    CHECK_THROWS_AS(ValueScheme(two, {{{1, Face::of({1, 2}).mask()}, 0.5}}), Error);
    CHECK_THROWS_AS(ValueScheme(two, {{{1, Face::of({4}).mask()}, 0.5}}), Error);
    CHECK_THROWS_AS(ValueScheme(two, {{{9, 0}, 0.5}}), Error);
    ValueScheme ok(two, {{{1, Face::of({2, 3}).mask()}, 0.5}});
    CHECK(ok.p(1, Face::of({2, 3})) == 0.5);
    CHECK(ok.p(1, Face::of({2})) == 0.0);
}

TEST_CASE("phi of the zero scheme vanishes") {
    auto two = fixture_complex("two-facet");
    Game v = random_game(two, 5, -1.0, 1.0);
    auto zero = zero_scheme(two);
    for (int i = 1; i <= 5; ++i) CHECK(phi(v, zero, i) == 0.0);
}

TEST_CASE("phi with symmetric weights splits a pair evenly") {
    auto full2 = Complex::full_simplex(2);
    auto shapley = shapley_scheme(full2);
    Game pair_carrier = carrier_game(Face::of({1, 2}), full2, false);
    CHECK(phi(pair_carrier, shapley, 1) == 0.5);
    CHECK(phi(pair_carrier, shapley, 2) == 0.5);
}

TEST_CASE("phi of the zero game vanishes") {
    auto chain = fixture_complex("chain3");
    auto scheme = random_scheme(chain, 9);
    Game zero(chain, {});
    for (int i = 1; i <= 5; ++i) CHECK(phi(zero, scheme, i) == 0.0);
}

TEST_CASE("group value of symmetric weights on the cardinality game") {
    auto full3 = fixture_complex("full3");
    auto values = group_value(cardinality_game(full3), shapley_scheme(full3));
    REQUIRE(values.size() == 3);
    for (double x : values) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sum_of(values) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("phi is linear in the game") {
    auto chain = fixture_complex("chain3");
    auto scheme = random_scheme(chain, 12);
    for (int trial = 0; trial < 20; ++trial) {
        Game v = random_game(chain, 100 + static_cast<std::uint64_t>(trial), -1.0, 1.0);
        Game w = random_game(chain, 200 + static_cast<std::uint64_t>(trial), -1.0, 1.0);
        for (int i = 1; i <= 5; ++i) {
            CHECK(phi(add(v, w), scheme, i) ==
                  doctest::Approx(phi(v, scheme, i) + phi(w, scheme, i)).epsilon(1e-9));
            CHECK(phi(scale(3.0, v), scheme, i) ==
                  doctest::Approx(3.0 * phi(v, scheme, i)).epsilon(1e-9));
        }
    }
}

TEST_CASE("induced coefficients of the zero scheme are empty") {
    auto two = fixture_complex("two-facet");
    CHECK(induced_coefficients(zero_scheme(two)).coeffs().empty());
}

TEST_CASE("induced coefficients of a single entry") {
    auto full2 = Complex::full_simplex(2);
    ValueScheme s(full2, {{{1, 0}, 1.0}}); // p[1][{}] = 1
    auto induced = induced_coefficients(s);
    CHECK(induced.at(Face::of({1})) == 1.0);
    CHECK(induced.at(Face::of({2})) == 0.0);
    CHECK(induced.at(Face::of({1, 2})) == 0.0);
    CHECK(induced.coeffs().size() == 1);
}

TEST_CASE("symmetric weights induce the grand-coalition point mass") {
    for (int n = 2; n <= 5; ++n) {
        auto full = Complex::full_simplex(n);
        auto induced = induced_coefficients(shapley_scheme(full));
        CHECK(induced.at(full->vertex_set()) == doctest::Approx(1.0).epsilon(1e-12));
        for (Face t : full->faces()) {
            if (t.empty() || t == full->vertex_set()) continue;
            CHECK(induced.at(t) == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("the reordering identity: sum of values = induced generic payoff") {
    for (const char* name : {"full3", "two-facet", "chain3", "u23", "u35"}) {
        auto complex = fixture_complex(name);
        auto scheme = random_scheme(complex, 77);
        auto induced = induced_coefficients(scheme);
        for (int trial = 0; trial < 100; ++trial) {
            Game v = random_game(complex, 3000 + static_cast<std::uint64_t>(trial),
                                 -1.0, 1.0);
            CHECK(sum_of(group_value(v, scheme)) ==
                  doctest::Approx(generic_payoff(v, induced)).epsilon(1e-9));
        }
        for (Face t : complex->faces()) {
            if (t.empty()) continue;
            Game v = carrier_game(t, complex, false);
            CHECK(sum_of(group_value(v, scheme)) ==
                  doctest::Approx(generic_payoff(v, induced)).epsilon(1e-9));
            Game vhat = carrier_game(t, complex, true);
            CHECK(sum_of(group_value(vhat, scheme)) ==
                  doctest::Approx(generic_payoff(vhat, induced)).epsilon(1e-9));
        }
    }
}

TEST_CASE("facet coefficients never receive a leaving term") {
    // no player's link contains a facet
    for (const char* name : {"full4", "two-facet", "chain3", "u24"}) {
        auto complex = fixture_complex(name);
        for (int i = 1; i <= complex->vertex_count(); ++i)
            for (Face t : complex->link_vertex(i)) CHECK_FALSE(complex->is_facet(t));
    }
}

TEST_CASE("check_efficiency compares induced against target") {
    auto full3 = fixture_complex("full3");
    auto traditional = traditional_family(full3);

    auto pass = check_efficiency(shapley_scheme(full3), traditional, 1e-12);
    CHECK(pass.pass);
    CHECK(pass.max_abs_residual <= 1e-12);
    CHECK(pass.axiom == "traditional");

    auto fail = check_efficiency(zero_scheme(full3), traditional, 1e-9);
    CHECK_FALSE(fail.pass);
    CHECK(fail.max_abs_residual == 1.0);
    CHECK(fail.residuals.at(full3->vertex_set().mask()) == -1.0);

    CoefficientFamily zero_family(full3, {}, FamilyLabel::generic);
    CHECK(check_efficiency(zero_scheme(full3), zero_family, 1e-12).pass);
}

TEST_CASE("solve hits the traditional target on the full simplex") {
    auto full3 = fixture_complex("full3");
    auto result = solve_scheme(full3, traditional_family(full3));
    CHECK(result.residual_norm <= kFeasibilityThreshold);
    CHECK(check_efficiency(result.scheme, traditional_family(full3), 1e-8).pass);
}

TEST_CASE("solve returns the zero scheme for the zero family") {
    auto two = fixture_complex("two-facet");
    CoefficientFamily zero_family(two, {}, FamilyLabel::generic);
    auto result = solve_scheme(two, zero_family);
    CHECK(result.residual_norm <= kFeasibilityThreshold);
    CHECK(result.scheme.entries().empty());
}

TEST_CASE("solve hits the d family off the full simplex") {
    auto two = fixture_complex("two-facet");
    auto d = d_coefficients(two);
    auto result = solve_scheme(two, d);
    CHECK(result.residual_norm <= kFeasibilityThreshold);
    CHECK(check_efficiency(result.scheme, d, 1e-8).pass);
}

TEST_CASE("solve round trip across fixtures and targets") {
    for (const char* name : {"full4", "two-facet", "chain3", "u23", "u24"}) {
        auto complex = fixture_complex(name);
        std::vector<CoefficientFamily> targets{
            uniform_probabilistic_family(complex),
            d_coefficients(complex),
            random_generic_family(complex, 321),
        };
        if (complex->is_full_simplex()) targets.push_back(traditional_family(complex));
        for (const auto& target : targets) {
            auto result = solve_scheme(complex, target);
            REQUIRE(result.residual_norm <= kFeasibilityThreshold);
            CHECK(check_efficiency(result.scheme, target, 1e-6).pass);
        }
    }
}

TEST_CASE("carrier converse check mirrors check_efficiency") {
    auto full3 = fixture_complex("full3");
    auto traditional = traditional_family(full3);

    auto good = carrier_converse_check(shapley_scheme(full3), traditional, 1e-9);
    CHECK(good.pass);
    CHECK_FALSE(good.witness.has_value());

    auto bad = carrier_converse_check(zero_scheme(full3), traditional, 1e-9);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == full3->vertex_set());
}

TEST_CASE("the two checks agree on passing and perturbed schemes") {
    for (const char* name : {"full3", "two-facet", "chain3", "u23"}) {
        auto complex = fixture_complex(name);
        std::vector<CoefficientFamily> targets{
            uniform_probabilistic_family(complex),
            d_coefficients(complex),
            random_generic_family(complex, 432),
        };
        if (complex->is_full_simplex()) targets.push_back(traditional_family(complex));
        for (const auto& target : targets) {
            auto solved = solve_scheme(complex, target).scheme;
            CHECK(check_efficiency(solved, target, 1e-9).pass ==
                  carrier_converse_check(solved, target, 1e-9).pass);

            // shift one weight; both verdicts must flip together
            auto entries = solved.entries();
            auto first = entries.empty()
                             ? std::map<ValueScheme::Key, double>{{{1, 0}, 1e-3}}
                             : [&] {
                                   auto copy = entries;
                                   copy.begin()->second += 1e-3;
                                   return copy;
                               }();
            ValueScheme perturbed(complex, std::move(first));
            const bool a = check_efficiency(perturbed, target, 1e-9).pass;
            const bool b = carrier_converse_check(perturbed, target, 1e-9).pass;
            CHECK_FALSE(a);
            CHECK_FALSE(b);
        }
    }
}

TEST_CASE("checks demand a shared complex") {
    auto full3 = fixture_complex("full3");
    auto two = fixture_complex("two-facet");
    CHECK_THROWS_AS(
        (void)check_efficiency(zero_scheme(two), traditional_family(full3), 1e-9),
        Error);
    CHECK_THROWS_AS(
        (void)carrier_converse_check(zero_scheme(two), traditional_family(full3), 1e-9),
        Error);
    CHECK_THROWS_AS((void)phi(cardinality_game(full3), zero_scheme(two), 1), Error);
}

} // TEST_SUITE
