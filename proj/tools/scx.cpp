#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scx/errors.hpp"
#include "scx/json_io.hpp"

namespace {

using nlohmann::json;

struct Output {
    std::string format = "json";
    std::string path; // empty = stdout
};

void render_text(const json& value, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (value.is_object()) {
        for (const auto& [key, item] : value.items()) {
            if (item.is_object() || (item.is_array() && !item.empty() &&
                                     (item[0].is_object() || item[0].is_array()))) {
                os << pad << key << ":\n";
                render_text(item, os, indent + 1);
            } else {
                os << pad << key << ": " << item.dump() << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto& item : value) {
            if (item.is_object() || item.is_array()) {
                os << pad << "-\n";
                render_text(item, os, indent + 1);
            } else {
                os << pad << "- " << item.dump() << "\n";
            }
        }
    } else {
        os << pad << value.dump() << "\n";
    }
}

void emit(const json& doc, const Output& output) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!output.path.empty()) {
        file.open(output.path);
        if (!file) scx::fail(scx::ErrorCode::invalid_document,
                             "cannot write " + output.path);
        os = &file;
    }
    if (output.format == "text") {
        render_text(doc, *os, 0);
    } else {
        *os << doc.dump() << "\n";
    }
}

struct Caps {
    int main_cap = scx::kDefaultFacetCap;
    int oracle_cap = scx::kOracleFacetCap;
};

Caps caps_from_env() {
    Caps caps;
    if (const char* env = std::getenv("SCX_FACET_CAP")) {
        try {
            const int cap = std::stoi(env);
            if (cap < 1) throw std::invalid_argument("nonpositive");
            caps.main_cap = cap;
            caps.oracle_cap = cap;
            std::cerr << "warning: facet cap overridden to " << cap
                      << " via SCX_FACET_CAP; subset enumerations grow as 2^k\n";
        } catch (const std::exception&) {
            scx::fail(scx::ErrorCode::invalid_document,
                      "SCX_FACET_CAP must be a positive integer");
        }
    }
    return caps;
}

scx::CoefficientFamily target_for_axiom(const std::string& axiom,
                                        const scx::ComplexPtr& complex,
                                        const std::string& coeffs_path,
                                        const Caps& caps) {
    if (axiom == "traditional") return scx::traditional_family(complex);
    if (axiom == "simplicial") return scx::d_coefficients(complex, caps.main_cap);
    if (axiom == "probabilistic" || axiom == "generic") {
        if (coeffs_path.empty())
            scx::fail(scx::ErrorCode::invalid_document,
                      "axiom \"" + axiom + "\" requires --coeffs");
        return scx::load_family(coeffs_path, complex,
                                axiom == "probabilistic"
                                    ? scx::FamilyLabel::probabilistic
                                    : scx::FamilyLabel::generic);
    }
    scx::fail(scx::ErrorCode::invalid_document, "unknown axiom \"" + axiom + "\"");
}

json flags_to_json(const scx::ProbabilisticFlags& flags) {
    return json{{"sum_to_one", flags.sum_to_one},
                {"nonnegative", flags.nonnegative},
                {"is_distribution", flags.is_distribution()}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cooperative games on simplicial complexes"};
    app.require_subcommand(1);

    Output output;
    app.add_option("--format", output.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("-o,--output", output.path, "write the result to a file");

    std::string input_path, scheme_path, coeffs_path, axiom;
    double tolerance = 1e-9; // > 0
    int trials = 100;        // >= 1
    int orders = 100;
    std::uint64_t seed = 0;

    auto* complex_cmd = app.add_subcommand("complex", "complex inspection");
    auto* info_cmd = complex_cmd->add_subcommand("info", "summarize a complex");
    info_cmd->add_option("complex", input_path, "complex document")->required();

    auto* payoff_cmd = app.add_subcommand("payoff", "total payoff of a game");
    payoff_cmd->add_option("--axiom", axiom, "efficiency notion")->required();
    payoff_cmd->add_option("--coeffs", coeffs_path, "coefficient document");
    payoff_cmd->add_option("game", input_path, "game document")->required();

    auto* dcoeff_cmd = app.add_subcommand("dcoeff", "inclusion-exclusion coefficients");
    dcoeff_cmd->add_option("complex", input_path, "complex document")->required();

    auto* values_cmd = app.add_subcommand("values", "individual values of a game");
    values_cmd->add_option("--scheme", scheme_path, "scheme document")->required();
    values_cmd->add_option("game", input_path, "game document")->required();

    auto* check_cmd = app.add_subcommand("check", "check a scheme against an axiom");
    check_cmd->add_option("--scheme", scheme_path, "scheme document")->required();
    check_cmd->add_option("--axiom", axiom, "efficiency notion")->required();
    check_cmd->add_option("--coeffs", coeffs_path, "coefficient document");
    check_cmd->add_option("--tol", tolerance, "residual tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    check_cmd->add_option("complex", input_path, "complex document")->required();

    auto* solve_cmd = app.add_subcommand("solve", "construct a scheme for an axiom");
    solve_cmd->add_option("--axiom", axiom, "efficiency notion")->required();
    solve_cmd->add_option("--coeffs", coeffs_path, "coefficient document");
    solve_cmd->add_option("complex", input_path, "complex document")->required();

    auto* compare_cmd = app.add_subcommand("compare-formulas",
                                           "evaluate every payoff formula side by side");
    compare_cmd->add_option("game", input_path, "game document")->required();
    compare_cmd->add_option("--orders", orders, "random facet orders")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    compare_cmd->add_option("--seed", seed, "random seed")->capture_default_str();

    auto* matroid_cmd = app.add_subcommand("matroid", "matroid structure");
    auto* matroid_check_cmd =
        matroid_cmd->add_subcommand("check", "exchange-axiom verdict");
    matroid_check_cmd->add_option("complex", input_path, "complex document")->required();
    auto* matroid_shelling_cmd =
        matroid_cmd->add_subcommand("shelling", "verified lexicographic shelling");
    matroid_shelling_cmd->add_option("complex", input_path, "complex document")
        ->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force recomputations");
    auto* oracle_d_cmd =
        oracle_cmd->add_subcommand("d", "audit the d coefficients");
    oracle_d_cmd->add_option("complex", input_path, "complex document")->required();
    auto* oracle_char_cmd = oracle_cmd->add_subcommand(
        "characterization", "replay the efficiency identity on concrete games");
    oracle_char_cmd->add_option("--scheme", scheme_path, "scheme document")->required();
    oracle_char_cmd->add_option("--axiom", axiom, "efficiency notion")->required();
    oracle_char_cmd->add_option("--coeffs", coeffs_path, "coefficient document");
    oracle_char_cmd->add_option("--trials", trials, "random games")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oracle_char_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    oracle_char_cmd->add_option("--tol", tolerance, "deviation tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oracle_char_cmd->add_option("complex", input_path, "complex document")->required();
    auto* oracle_orders_cmd =
        oracle_cmd->add_subcommand("orders", "sequential payoff across facet orders");
    oracle_orders_cmd->add_option("game", input_path, "game document")->required();
    oracle_orders_cmd->add_option("--orders", orders, "facet orders")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oracle_orders_cmd->add_option("--seed", seed, "random seed")->capture_default_str();

    // let --format / -o appear after the subcommand as well
    for (CLI::App* level1 : app.get_subcommands(nullptr)) {
        level1->fallthrough();
        for (CLI::App* level2 : level1->get_subcommands(nullptr)) level2->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const Caps caps = caps_from_env();

        if (info_cmd->parsed()) {
            const scx::ComplexPtr complex = scx::load_complex(input_path);
            json facets = json::array();
            for (scx::Face f : complex->facets()) facets.push_back(f.vertices());
            emit(json{{"n", complex->vertex_count()},
                      {"facets", std::move(facets)},
                      {"facet_count", complex->facet_count()},
                      {"face_count", complex->face_count()},
                      {"pure", complex->is_pure()},
                      {"dimension", complex->dimension()},
                      {"full_simplex", complex->is_full_simplex()}},
                 output);
            return 0;
        }

        if (payoff_cmd->parsed()) {
            const scx::Game game = scx::load_game(input_path);
            json out{{"axiom", axiom}};
            if (axiom == "traditional") {
                out["value"] = scx::traditional_payoff(game);
            } else if (axiom == "simplicial") {
                out["value"] = scx::simplicial_payoff(game, caps.main_cap);
            } else if (axiom == "probabilistic") {
                const auto family = target_for_axiom(axiom, game.complex(),
                                                     coeffs_path, caps);
                const auto result = scx::probabilistic_payoff(game, family);
                out["value"] = result.value;
                out["flags"] = flags_to_json(result.flags);
            } else if (axiom == "generic") {
                const auto family = target_for_axiom(axiom, game.complex(),
                                                     coeffs_path, caps);
                out["value"] = scx::generic_payoff(game, family);
            } else {
                scx::fail(scx::ErrorCode::invalid_document,
                          "unknown axiom \"" + axiom + "\"");
            }
            emit(out, output);
            return 0;
        }

        if (dcoeff_cmd->parsed()) {
            const scx::ComplexPtr complex = scx::load_complex(input_path);
            emit(scx::coeffs_to_json(scx::d_coefficients(complex, caps.main_cap)),
                 output);
            return 0;
        }

        if (values_cmd->parsed()) {
            const scx::Game game = scx::load_game(input_path);
            const scx::ValueScheme scheme = scx::load_scheme(scheme_path);
            const scx::GroupValue values = scx::group_value(game, scheme);
            double sum = 0.0;
            for (double x : values) sum += x;
            emit(json{{"values", values}, {"sum", sum}}, output);
            return 0;
        }

        if (check_cmd->parsed()) {
            const scx::ComplexPtr complex = scx::load_complex(input_path);
            const scx::ValueScheme scheme = scx::load_scheme(scheme_path);
            const auto target = target_for_axiom(axiom, complex, coeffs_path, caps);
            const scx::EfficiencyReport report =
                scx::check_efficiency(scheme, target, tolerance);
            emit(scx::report_to_json(report), output);
            return report.pass ? 0 : 1;
        }

        if (solve_cmd->parsed()) {
            const scx::ComplexPtr complex = scx::load_complex(input_path);
            const auto target = target_for_axiom(axiom, complex, coeffs_path, caps);
            const scx::SolveResult result =
                scx::solve_scheme(complex, target, caps.main_cap);
            const bool feasible = result.residual_norm <= scx::kFeasibilityThreshold;
            json summary{{"axiom", axiom},
                         {"residual_norm", result.residual_norm},
                         {"feasible", feasible}};
            if (output.path.empty()) {
                summary["scheme"] = scx::scheme_to_json(result.scheme);
                emit(summary, output);
            } else {
                emit(scx::scheme_to_json(result.scheme), output);
                Output to_stdout{output.format, ""};
                emit(summary, to_stdout);
            }
            return feasible ? 0 : 3;
        }

        if (compare_cmd->parsed()) {
            const scx::Game game = scx::load_game(input_path);
            emit(scx::report_to_json(
                     scx::compare_formulas(game, orders, seed, caps.main_cap)),
                 output);
            return 0;
        }

        if (matroid_check_cmd->parsed()) {
            const scx::ComplexPtr complex = scx::load_complex(input_path);
            const scx::MatroidCheck check = scx::check_matroid(complex);
            emit(scx::report_to_json(check), output);
            return check.is_matroid ? 0 : 1;
        }

        if (matroid_shelling_cmd->parsed()) {
            const scx::ComplexPtr complex = scx::load_complex(input_path);
            try {
                emit(scx::shelling_to_json(scx::shelling_order(complex)), output);
            } catch (const scx::Error& e) {
                if (e.code() == scx::ErrorCode::not_a_matroid ||
                    e.code() == scx::ErrorCode::shelling_verification_failed) {
                    std::cerr << "scx: " << e.what() << "\n";
                    return 1;
                }
                throw;
            }
            return 0;
        }

        if (oracle_d_cmd->parsed()) {
            const scx::ComplexPtr complex = scx::load_complex(input_path);
            const scx::OracleReport report =
                scx::oracle_d_report(complex, caps.main_cap, caps.oracle_cap);
            emit(scx::report_to_json(report), output);
            return report.pass() ? 0 : 1;
        }

        if (oracle_char_cmd->parsed()) {
            const scx::ComplexPtr complex = scx::load_complex(input_path);
            const scx::ValueScheme scheme = scx::load_scheme(scheme_path);
            const auto target = target_for_axiom(axiom, complex, coeffs_path, caps);
            const scx::OracleReport report = scx::oracle_characterization(
                complex, target, scheme, trials, seed, tolerance);
            emit(scx::report_to_json(report), output);
            return report.pass() ? 0 : 1;
        }

        if (oracle_orders_cmd->parsed()) {
            const scx::Game game = scx::load_game(input_path);
            const scx::OracleReport report =
                scx::oracle_order_independence(game, orders, seed);
            emit(scx::report_to_json(report), output);
            return report.pass() ? 0 : 1;
        }
    } catch (const scx::Error& e) {
        std::cerr << "scx: " << e.what() << "\n";
        switch (e.code()) {
            case scx::ErrorCode::facet_cap_exceeded:
            case scx::ErrorCode::capacity_exceeded:
                return 3;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "scx: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
