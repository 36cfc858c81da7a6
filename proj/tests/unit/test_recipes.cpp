#include <gtest/gtest.h>

#include "dchroma/error.hpp"
#include "dchroma/recipes.hpp"

using namespace dchroma;

TEST(Recipes, Catalogue) {
  for (const auto& name : recipe_names()) EXPECT_FALSE(recipe_criteria(name).empty()) << name;
  EXPECT_EQ(recipe_criteria("all").size(), 11u);
  EXPECT_THROW(recipe_criteria("nope"), Error);
  EXPECT_THROW(criterion_checks(12, {}), Error);
}

TEST(Recipes, LeviReportIsDeterministicAndVersioned) {
  RecipeConfig cfg;
  cfg.seed = 3;
  const auto a = run_recipe("levi", cfg);
  const auto b = run_recipe("levi", cfg);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["schema"], kReportSchema);
  EXPECT_EQ(a["seed"], 3);
  EXPECT_TRUE(a["pass"].get<bool>());
  for (const auto& c : a["checks"]) {
    EXPECT_TRUE(c.contains("criterion"));
    EXPECT_TRUE(c.contains("values"));
  }
}
