#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "scx/oracle.hpp"

namespace scx {

/// Parses "1,2,3" (ascending vertices, "" for the empty face).
Face face_from_key(const std::string& key, int n);

nlohmann::json complex_to_json(const Complex& complex);
ComplexPtr complex_from_json(const nlohmann::json& doc);
ComplexPtr load_complex(const std::filesystem::path& path);

/// Game documents may hold the complex inline or name a sibling file;
/// relative paths resolve against base_dir.
Game game_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);
Game load_game(const std::filesystem::path& path);
nlohmann::json game_to_json(const Game& game);

ValueScheme scheme_from_json(const nlohmann::json& doc,
                             const std::filesystem::path& base_dir);
ValueScheme load_scheme(const std::filesystem::path& path);
nlohmann::json scheme_to_json(const ValueScheme& scheme);

/// Coefficient documents may omit the complex, in which case they bind to
/// the one supplied by the caller.
CoefficientFamily family_from_json(const nlohmann::json& doc,
                                   const std::filesystem::path& base_dir,
                                   const ComplexPtr& bound_complex,
                                   FamilyLabel default_label);
CoefficientFamily load_family(const std::filesystem::path& path,
                              const ComplexPtr& bound_complex,
                              FamilyLabel default_label);
nlohmann::json family_to_json(const CoefficientFamily& family);

/// Bare {"face": coefficient} object, the `dcoeff` output format.
nlohmann::json coeffs_to_json(const CoefficientFamily& family);

nlohmann::json report_to_json(const EfficiencyReport& report);
nlohmann::json report_to_json(const OracleReport& report);
nlohmann::json report_to_json(const FormulaComparison& comparison);
nlohmann::json report_to_json(const MatroidCheck& check);
nlohmann::json shelling_to_json(const ShellingOrder& order);

nlohmann::json load_json(const std::filesystem::path& path);

} // namespace scx
