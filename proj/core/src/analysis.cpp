#include "rescue/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "rescue/decay.hpp"
#include "rescue/error.hpp"
#include "rescue/quadrature.hpp"
#include "rescue/random.hpp"

namespace rescue {

std::string_view to_string(PositivityMethod method) noexcept {
  switch (method) {
    case PositivityMethod::Analytic:
      return "analytic";
    case PositivityMethod::Quadrature:
      return "quadrature";
    case PositivityMethod::MonteCarlo:
      break;
  }
  return "montecarlo";
}

void PopulationModel::validate() const {
  if (n == 0) throw ValidationError("n", "item count must be >= 1");
  if (!(low >= 0.0 && low <= 1.0)) {
    throw ValidationError("low", "lower bound must lie in [0,1], got " + std::to_string(low));
  }
  if (!(high >= 0.0 && high <= 1.0)) {
    throw ValidationError("high", "upper bound must lie in [0,1], got " + std::to_string(high));
  }
  if (!(low < high)) throw ValidationError("low", "lower bound must be below upper bound");
  if (!(decay_step >= 0.0) || !std::isfinite(decay_step)) {
    throw ValidationError("decay", "decay step must be a finite value >= 0, got " +
                                       std::to_string(decay_step));
  }
}

double prob_strongest_first_positive(const PopulationModel& model) {
  model.validate();
  const std::vector<double> thresholds = linear_decay_sequence(model.decay_step, model.n);
  // Descending service puts the k-th largest draw at stage k. Each such draw is
  // at least the minimum, and the last threshold is the largest, so the
  // minimum clearing the last threshold covers every stage.
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) {
    throw std::logic_error("stage thresholds must be non-decreasing");
  }
  const double last = thresholds.back();
  const double q = std::clamp((model.high - last) / (model.high - model.low), 0.0, 1.0);
  return std::pow(q, static_cast<double>(model.n));
}

std::vector<Threshold> active_thresholds(const PopulationModel& model) {
  model.validate();
  const std::vector<double> thresholds = linear_decay_sequence(model.decay_step, model.n);
  std::vector<Threshold> active;
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    if (thresholds[k] > model.low) active.push_back(Threshold{k + 1, thresholds[k]});
  }
  return active;
}

double prob_weakest_first_positive_quadrature(const PopulationModel& model,
                                              double abs_tolerance) {
  const std::vector<Threshold> active = active_thresholds(model);
  const std::size_t m = active.size();
  if (m == 0) return 1.0;
  if (m > kMaxQuadratureDimension) {
    throw DimensionError(std::to_string(m) + " active constraints exceed the quadrature limit of " +
                         std::to_string(kMaxQuadratureDimension) + "; use simulation");
  }
  if (active.back().threshold >= model.high) return 0.0;

  const double width = model.high - model.low;
  const double below_count = static_cast<double>(model.n - m);
  const auto cdf = [&](double x) { return (x - model.low) / width; };

  // Joint density of the top m order statistics x_1 < ... < x_m:
  //   n!/(n-m)! * F(x_1)^(n-m) * f^m, with f = 1/width.
  // Variable j ranges over (threshold_j, x_{j+1}); the outermost over
  // (threshold_m, high). The constant factor is applied once at the end.
  std::function<double(std::size_t, double)> integrate_level = [&](std::size_t level,
                                                                   double upper) -> double {
    if (level == 0) {
      return integrate_adaptive([&](double x) { return std::pow(cdf(x), below_count); },
                                active[0].threshold, upper, abs_tolerance)
          .value;
    }
    return integrate_adaptive([&](double x) { return integrate_level(level - 1, x); },
                              active[level].threshold, upper, abs_tolerance)
        .value;
  };

  double factor = 1.0;
  for (std::size_t i = 0; i < m; ++i) factor *= static_cast<double>(model.n - i) / width;
  const double probability = factor * integrate_level(m - 1, model.high);
  return std::clamp(probability, 0.0, 1.0);
}

MonteCarloEstimate prob_positive_montecarlo(const PopulationModel& model, SortDirection direction,
                                            std::uint64_t trials, std::uint64_t seed) {
  model.validate();
  if (trials == 0) throw ValidationError("trials", "trial count must be >= 1");

  const std::vector<double> decay = linear_decay_sequence(model.decay_step, model.n);
  SeededRng rng(seed);
  std::vector<double> draws(model.n);
  std::uint64_t successes = 0;

  for (std::uint64_t t = 0; t < trials; ++t) {
    for (double& v : draws) v = rng.uniform(model.low, model.high);
    if (direction == SortDirection::Ascending) {
      std::sort(draws.begin(), draws.end());
    } else {
      std::sort(draws.begin(), draws.end(), std::greater<>());
    }
    bool all_positive = true;
    for (std::size_t k = 0; k < draws.size(); ++k) {
      if (!(std::max(draws[k] - decay[k], 0.0) > 0.0)) {
        all_positive = false;
        break;
      }
    }
    if (all_positive) ++successes;
  }

  const double n = static_cast<double>(trials);
  const double estimate = static_cast<double>(successes) / n;
  return MonteCarloEstimate{estimate, std::sqrt(estimate * (1.0 - estimate) / n), successes,
                            trials};
}

PositivityReport positivity_report(const PopulationModel& model) {
  return PositivityReport{prob_strongest_first_positive(model),
                          prob_weakest_first_positive_quadrature(model),
                          PositivityMethod::Quadrature};
}

PositivityReport positivity_report_montecarlo(const PopulationModel& model, std::uint64_t trials,
                                              std::uint64_t seed) {
  const MonteCarloEstimate strongest =
      prob_positive_montecarlo(model, SortDirection::Descending, trials, seed);
  const MonteCarloEstimate weakest =
      prob_positive_montecarlo(model, SortDirection::Ascending, trials, seed);
  return PositivityReport{strongest.estimate, weakest.estimate, PositivityMethod::MonteCarlo,
                          strongest.std_error, weakest.std_error};
}

}  // namespace rescue
