#pragma once

// Property suites over catalogues and random functions: preservation
// theorems, model-prediction coherence, enumeration oracles, equivalence
// theory and standardizations.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "supermod/enumerate.hpp"
#include "supermod/set_function.hpp"

namespace supermod::verify {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few failures

  [[nodiscard]] bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::string to_json() const;
  [[nodiscard]] std::string to_text() const;
};

struct Options {
  /// Catalogue size n; random functions are drawn at n and n+1.
  int n = 3;
  std::size_t random_count = 200;
  std::uint64_t seed = 0x5eed;
  /// Negative control: plant a non-extreme generator in the oracle suite's catalogue.
  bool inject_corruption = false;
};

[[nodiscard]] const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const Options& options);

SuiteReport preservation_suite(const Options& options);
SuiteReport models_suite(const Options& options);
SuiteReport oracle_suite(const Options& options);
SuiteReport equivalence_suite(const Options& options);
SuiteReport standardization_suite(const Options& options);

// Random inputs.
using Rng = std::mt19937_64;
Rational random_rational(Rng& rng, int max_abs_num, int max_den);
SetFunction random_function(const VariableSet& vars, Rng& rng, int range = 3);
SetFunction random_modular(const VariableSet& vars, Rng& rng);
/// Sparse positive combination of 1..max_terms catalogue generators.
SetFunction random_lower_supermodular(const RayCatalogue& catalogue, Rng& rng, int max_terms = 3);
/// random_lower_supermodular plus a random modular function.
SetFunction random_supermodular(const RayCatalogue& catalogue, Rng& rng, int max_terms = 3);

/// Catalogue memoized per n for the lifetime of the process.
const RayCatalogue& catalogue(int n);

}  // namespace supermod::verify
