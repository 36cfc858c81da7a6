// Acceptance runner: one PASS/FAIL line per criterion, sub-checks indented.
// Tolerances live next to each check in src/recipes.cpp.
#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "dchroma/error.hpp"
#include "dchroma/recipes.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> criteria;
  dchroma::RecipeConfig cfg;
  bool verbose = false;
  app.add_option("--criterion", criteria, "criterion numbers (default: all)")->check(CLI::Range(1, 11));
  app.add_option("--seed", cfg.seed);
  app.add_option("--threads", cfg.threads);
  app.add_flag("-v,--verbose", verbose, "print check values");
  CLI11_PARSE(app, argc, argv);
  if (criteria.empty())
    for (int i = 1; i <= 11; ++i) criteria.push_back(i);

  bool all = true;
  for (int n : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<dchroma::Check> checks;
    std::string error;
    try {
      checks = dchroma::criterion_checks(n, cfg);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = error.empty();
    for (const auto& c : checks) pass = pass && c.pass;
    all = all && pass;
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " (" << secs << " s)\n";
    for (const auto& c : checks) {
      std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
      if (verbose || !c.pass) {
        std::string dump = c.values.dump();
        if (!verbose && dump.size() > 1500) dump = dump.substr(0, 1500) + " ...";
        std::cout << "         " << dump << "\n";
      }
    }
    if (!error.empty()) std::cout << "  error: " << error << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
