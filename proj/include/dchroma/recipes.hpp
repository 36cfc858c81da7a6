#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dchroma/automorphism.hpp"

namespace dchroma {

inline constexpr std::string_view kReportSchema = "dchroma.report/1";

struct RecipeConfig {
  std::uint64_t seed = 7;
  SearchOptions search;
  unsigned threads = 1;
};

struct Check {
  int criterion = 0;
  std::string name;
  bool pass = false;
  nlohmann::json values = nlohmann::json::object();
};

/// Checks for one numbered acceptance criterion (1..11).
std::vector<Check> criterion_checks(int criterion, const RecipeConfig& cfg);

/// levi, lg1, weak, gs, kneser, krs, appendix, all.
const std::vector<std::string>& recipe_names();
/// Criteria run by a recipe; Error(InvalidParameters) for unknown names.
std::vector<int> recipe_criteria(std::string_view recipe);

nlohmann::json check_to_json(const Check& c);
/// {schema, recipe, seed, pass, checks}. No timing fields, so equal seeds
/// give byte-identical dumps.
nlohmann::json run_recipe(std::string_view recipe, const RecipeConfig& cfg);

}  // namespace dchroma
