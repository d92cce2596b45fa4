#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opsplit/closed_forms.hpp"
#include "opsplit/suites.hpp"

namespace opsplit {

// Operators used by `iterate`. The model operators are the defaults.
enum class IterOperatorA { kTranslatedIdentity, kZero, kAffineRandom };
enum class IterOperatorB { kProjector, kZero, kAffineRandom };

// Everything a CLI run needs, parsed from one flat JSON document.
//
// Recognized keys: dim, seed, gamma, lambda, w, v, a, U (list of spanning
// vectors), a_sign, tol_single, tol_multi, tol_power, witness_threshold,
// witness_budget, instances, samples, min_dim, max_dim, suites, max_iters,
// stop_tol, x0, probe, operator_a, operator_b, out. Unknown keys are rejected.
//
// Without any model keys the instance is the 2-d worked example; once dim is
// set to anything else, missing vectors default to zero and U to {0}.
struct RunConfig {
  ModelInstance model = worked_instance();
  std::uint64_t seed = 1;
  SuiteConfig suite;                // model, seed and tolerances mirrored from above
  std::vector<SuiteId> suites;      // empty means the whole registry
  int max_iters = 1000;
  double stop_tol = 1e-10;
  std::optional<Point> x0;          // origin when absent
  std::optional<Point> probe;       // (2, 0, ..., 0) when absent
  IterOperatorA operator_a = IterOperatorA::kTranslatedIdentity;
  IterOperatorB operator_b = IterOperatorB::kProjector;
  std::filesystem::path out = ".";

  std::vector<SuiteId> selected_suites() const;
  Point start() const;
  Point probe_point() const;
};

// Throws ConfigError (UnknownSuite for bad suite tags).
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& path);

// Command-line overrides, applied after the file.
void set_seed(RunConfig& config, std::uint64_t seed);
void set_suites(RunConfig& config, std::string_view comma_list);

// Cross-field checks that depend on the selected suites; throws ConfigError.
void check_run_config(const RunConfig& config);

// The pair iterated by `iterate`.
SplitPair iteration_pair(const RunConfig& config);

}  // namespace opsplit
