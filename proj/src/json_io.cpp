#include "scx/json_io.hpp"

#include <fstream>

#include "scx/errors.hpp"

namespace scx {

using nlohmann::json;

namespace {

[[noreturn]] void bad_document(const std::string& what) {
    fail(ErrorCode::invalid_document, what);
}

const json& expect(const json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end())
        bad_document("missing field \"" + std::string(field) + "\"");
    return *it;
}

int expect_int(const json& doc, const char* field) {
    const json& value = expect(doc, field);
    if (!value.is_number_integer())
        bad_document("field \"" + std::string(field) + "\" must be an integer");
    return value.get<int>();
}

ComplexPtr complex_from_field(const json& value, const std::filesystem::path& base_dir) {
    if (value.is_string())
        return load_complex(base_dir / value.get<std::string>());
    if (value.is_object()) return complex_from_json(value);
    bad_document("field \"complex\" must be an object or a path string");
}

} // namespace

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) bad_document("cannot open " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        bad_document(path.string() + ": " + e.what());
    }
    return doc;
}

Face face_from_key(const std::string& key, int n) {
    if (key.empty()) return Face{};
    std::uint32_t mask = 0;
    int last = 0;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(key.substr(pos), &used);
        } catch (const std::exception&) {
            bad_document("bad face key \"" + key + "\"");
        }
        if (v < 1 || v > n)
            fail(ErrorCode::vertex_out_of_range,
                 "face key \"" + key + "\": vertex " + std::to_string(v) +
                     " outside 1.." + std::to_string(n));
        if (v <= last)
            bad_document("face key \"" + key + "\" is not an ascending vertex list");
        last = v;
        mask |= std::uint32_t{1} << (v - 1);
        pos += used;
        if (pos < key.size()) {
            if (key[pos] != ',') bad_document("bad face key \"" + key + "\"");
            ++pos;
            if (pos == key.size()) bad_document("bad face key \"" + key + "\"");
        }
    }
    return Face(mask);
}

json complex_to_json(const Complex& complex) {
    json facets = json::array();
    for (Face f : complex.facets()) facets.push_back(f.vertices());
    return json{{"n", complex.vertex_count()}, {"facets", std::move(facets)}};
}

ComplexPtr complex_from_json(const json& doc) {
    if (!doc.is_object()) bad_document("complex document must be an object");
    const int n = expect_int(doc, "n");
    const json& facets = expect(doc, "facets");
    if (!facets.is_array()) bad_document("field \"facets\" must be an array");
    std::vector<std::vector<int>> sets;
    for (const json& facet : facets) {
        if (!facet.is_array()) bad_document("each facet must be an array of vertices");
        std::vector<int> vertices;
        for (const json& v : facet) {
            if (!v.is_number_integer()) bad_document("vertices must be integers");
            vertices.push_back(v.get<int>());
        }
        sets.push_back(std::move(vertices));
    }
    return Complex::from_facets(n, sets);
}

ComplexPtr load_complex(const std::filesystem::path& path) {
    return complex_from_json(load_json(path));
}

Game game_from_json(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) bad_document("game document must be an object");
    ComplexPtr complex = complex_from_field(expect(doc, "complex"), base_dir);
    const std::string kind = doc.value("kind", std::string("table"));

    if (kind == "table") {
        const json& values = expect(doc, "values");
        if (!values.is_object()) bad_document("field \"values\" must be an object");
        std::map<std::uint32_t, double> table;
        for (const auto& [key, value] : values.items()) {
            if (!value.is_number()) bad_document("game values must be numbers");
            const Face face = face_from_key(key, complex->vertex_count());
            table[face.mask()] = value.get<double>();
        }
        return Game(std::move(complex), std::move(table));
    }
    if (kind == "carrier") {
        const json& carrier = expect(doc, "carrier");
        const json& t = expect(carrier, "T");
        if (!t.is_array()) bad_document("field \"carrier.T\" must be an array");
        std::uint32_t mask = 0;
        for (const json& v : t) {
            if (!v.is_number_integer()) bad_document("vertices must be integers");
            const int vertex = v.get<int>();
            if (vertex < 1 || vertex > complex->vertex_count())
                fail(ErrorCode::vertex_out_of_range,
                     "carrier vertex " + std::to_string(vertex) + " out of range");
            mask |= std::uint32_t{1} << (vertex - 1);
        }
        const bool strict = carrier.value("strict", false);
        return carrier_game(Face(mask), std::move(complex), strict);
    }
    if (kind == "cardinality") return cardinality_game(std::move(complex));
    if (kind == "random") {
        const std::uint64_t seed = doc.value("seed", std::uint64_t{0});
        double lo = -1.0, hi = 1.0;
        if (doc.contains("range")) {
            const json& range = doc["range"];
            if (!range.is_array() || range.size() != 2)
                bad_document("field \"range\" must be [lo, hi]");
            lo = range[0].get<double>();
            hi = range[1].get<double>();
        }
        return random_game(std::move(complex), seed, lo, hi);
    }
    bad_document("unknown game kind \"" + kind + "\"");
}

Game load_game(const std::filesystem::path& path) {
    return game_from_json(load_json(path), path.parent_path());
}

json game_to_json(const Game& game) {
    json values = json::object();
    for (const auto& [mask, value] : game.values())
        values[face_key(Face(mask))] = value;
    return json{{"complex", complex_to_json(*game.complex())},
                {"kind", "table"},
                {"values", std::move(values)}};
}

ValueScheme scheme_from_json(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) bad_document("scheme document must be an object");
    ComplexPtr complex = complex_from_field(expect(doc, "complex"), base_dir);
    const json& p = expect(doc, "p");
    if (!p.is_object()) bad_document("field \"p\" must be an object");

    std::map<ValueScheme::Key, double> entries;
    for (const auto& [player_key, inner] : p.items()) {
        int player;
        try {
            player = std::stoi(player_key);
        } catch (const std::exception&) {
            bad_document("bad player key \"" + player_key + "\"");
        }
        if (!inner.is_object())
            bad_document("entries for player " + player_key + " must be an object");
        for (const auto& [key, value] : inner.items()) {
            if (!value.is_number()) bad_document("scheme weights must be numbers");
            const Face face = face_from_key(key, complex->vertex_count());
            entries[{player, face.mask()}] = value.get<double>();
        }
    }
    return ValueScheme(std::move(complex), std::move(entries));
}

ValueScheme load_scheme(const std::filesystem::path& path) {
    return scheme_from_json(load_json(path), path.parent_path());
}

json scheme_to_json(const ValueScheme& scheme) {
    json p = json::object();
    for (const auto& [key, value] : scheme.entries()) {
        const auto& [player, mask] = key;
        p[std::to_string(player)][face_key(Face(mask))] = value;
    }
    return json{{"complex", complex_to_json(*scheme.complex())}, {"p", std::move(p)}};
}

namespace {

FamilyLabel label_from_string(const std::string& name) {
    if (name == "generic") return FamilyLabel::generic;
    if (name == "probabilistic") return FamilyLabel::probabilistic;
    if (name == "traditional") return FamilyLabel::traditional;
    if (name == "simplicial") return FamilyLabel::simplicial_d;
    bad_document("unknown coefficient label \"" + name + "\"");
}

} // namespace

CoefficientFamily family_from_json(const json& doc,
                                   const std::filesystem::path& base_dir,
                                   const ComplexPtr& bound_complex,
                                   FamilyLabel default_label) {
    if (!doc.is_object()) bad_document("coefficient document must be an object");
    ComplexPtr complex = bound_complex;
    if (doc.contains("complex")) {
        complex = complex_from_field(doc["complex"], base_dir);
        if (bound_complex && !same_complex(complex, bound_complex))
            fail(ErrorCode::complex_mismatch,
                 "coefficient file names a different complex than the input");
    }
    if (!complex) bad_document("coefficient document lacks a complex");

    const FamilyLabel label =
        doc.contains("label") ? label_from_string(doc["label"].get<std::string>())
                              : default_label;
    const json& coeffs = expect(doc, "coeffs");
    if (!coeffs.is_object()) bad_document("field \"coeffs\" must be an object");
    std::map<std::uint32_t, double> table;
    for (const auto& [key, value] : coeffs.items()) {
        if (!value.is_number()) bad_document("coefficients must be numbers");
        const Face face = face_from_key(key, complex->vertex_count());
        table[face.mask()] = value.get<double>();
    }
    return CoefficientFamily(std::move(complex), std::move(table), label);
}

CoefficientFamily load_family(const std::filesystem::path& path,
                              const ComplexPtr& bound_complex,
                              FamilyLabel default_label) {
    return family_from_json(load_json(path), path.parent_path(), bound_complex,
                            default_label);
}

json family_to_json(const CoefficientFamily& family) {
    return json{{"complex", complex_to_json(*family.complex())},
                {"label", to_string(family.label())},
                {"coeffs", coeffs_to_json(family)}};
}

json coeffs_to_json(const CoefficientFamily& family) {
    json out = json::object();
    for (const auto& [mask, value] : family.coeffs())
        out[face_key(Face(mask))] = value;
    return out;
}

json report_to_json(const EfficiencyReport& report) {
    json residuals = json::object();
    for (const auto& [mask, value] : report.residuals)
        residuals[face_key(Face(mask))] = value;
    return json{{"axiom", report.axiom},
                {"residuals", std::move(residuals)},
                {"max_abs_residual", report.max_abs_residual},
                {"tolerance", report.tolerance},
                {"pass", report.pass}};
}

json report_to_json(const OracleReport& report) {
    json failures = json::array();
    for (const auto& failure : report.failures)
        failures.push_back(json{{"input", failure.input},
                                {"expected", failure.expected},
                                {"got", failure.got}});
    return json{{"subject", report.subject},
                {"trials", report.trials},
                {"tolerance", report.tolerance},
                {"max_abs_deviation", report.max_abs_deviation},
                {"failures", std::move(failures)},
                {"pass", report.pass()}};
}

json report_to_json(const FormulaComparison& comparison) {
    json sequential = json::array();
    for (const auto& [id, value] : comparison.sequential)
        sequential.push_back(json{{"order", id}, {"value", value}});
    json out{{"closed", comparison.closed},
             {"alternating", comparison.alternating},
             {"sequential", std::move(sequential)},
             {"max_pairwise_delta", comparison.max_pairwise_delta}};
    out["matroid_reduction"] =
        comparison.matroid_reduction ? json(*comparison.matroid_reduction) : json();
    return out;
}

json report_to_json(const MatroidCheck& check) {
    json out{{"is_matroid", check.is_matroid}};
    if (check.witness) {
        out["witness"] = json{{"a", check.witness->a.vertices()},
                              {"b", check.witness->b.vertices()}};
    }
    return out;
}

json shelling_to_json(const ShellingOrder& order) {
    json bases = json::array();
    for (Face b : order.order()) bases.push_back(b.vertices());
    json steps = json::array();
    int j = 2;
    for (const Subcomplex& step : shelling_steps(order)) {
        json intersection = json::array();
        for (Face f : step.facets()) intersection.push_back(f.vertices());
        steps.push_back(json{{"j", j}, {"intersection", std::move(intersection)}});
        ++j;
    }
    return json{{"rank", order.rank()},
                {"order", std::move(bases)},
                {"steps", std::move(steps)}};
}

} // namespace scx
