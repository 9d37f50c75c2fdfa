#pragma once

#include <string>
#include <string_view>

#include "rescue/decay.hpp"
#include "rescue/distribution.hpp"
#include "rescue/scheduler.hpp"

namespace rescue::cli {

/// A scenario document: initial probabilities in listed order, the decay law,
/// and the objective to optimize.
///
///   {
///     "probabilities": [0.8, 0.9, 0.7, 0.7],
///     "decay": {"type": "additive", "rate": 0.1, "interval": 1},
///     "objective": "all"
///   }
///
/// Additive decay takes either `rate` (d_i = rate*(i-1)) or an explicit
/// `per_stage` array; multiplicative decay takes `factor` in (0,1).
/// `objective` is "expected" (default) or "all".
struct ScenarioConfig {
  ProbabilityVector probabilities;
  DecaySpec decay;
  Objective objective = Objective::ExpectedSuccesses;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Throws ValidationError naming the offending field (JSON syntax errors are
/// reported with their byte offset).
ScenarioConfig parse_scenario(std::string_view text);

/// Canonical form; additive decay is always written as `per_stage`.
std::string serialize_scenario(const ScenarioConfig& config);

Objective parse_objective(std::string_view name);

}  // namespace rescue::cli
