#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rescue/scheduler.hpp"

namespace rescue {

/// n items with initial probabilities i.i.d. Uniform(low, high); the item
/// served at stage k loses decay_step * (k-1), clamped at zero.
struct PopulationModel {
  std::size_t n = 13;
  double low = 0.5;
  double high = 1.0;
  double decay_step = 0.06;

  /// Throws ValidationError unless n >= 1, 0 <= low < high <= 1, decay_step >= 0.
  void validate() const;
};

/// Stage constraint for weakest-first service: the rank-th smallest draw
/// (1-based) must exceed `threshold` for that item to keep a positive probability.
struct Threshold {
  std::size_t rank;
  double threshold;
};

enum class PositivityMethod { Analytic, Quadrature, MonteCarlo };

std::string_view to_string(PositivityMethod method) noexcept;

/// Probability that every item keeps a positive at-service probability,
/// under strongest-first (descending) and weakest-first (ascending) service.
struct PositivityReport {
  double prob_strongest_first_positive;
  double prob_weakest_first_positive;
  PositivityMethod method;
  double strongest_std_error = 0.0;  ///< non-zero only for MonteCarlo
  double weakest_std_error = 0.0;    ///< non-zero only for MonteCarlo
};

struct MonteCarloEstimate {
  double estimate;
  double std_error;
  std::uint64_t successes;
  std::uint64_t trials;
};

/// Highest number of active constraints the nested quadrature integrates.
inline constexpr std::size_t kMaxQuadratureDimension = 6;

/// Strongest-first keeps everyone positive iff the smallest draw exceeds
/// decay_step * (n-1): q^n with q = clamp((high - d(n-1)) / (high - low), 0, 1).
double prob_strongest_first_positive(const PopulationModel& model);

/// Weakest-first stage constraints whose threshold decay_step*(k-1) lies above
/// `low`. Thresholds grow with rank, so these are always the top ranks.
std::vector<Threshold> active_thresholds(const PopulationModel& model);

/// Integrates the joint density of the top-m order statistics over the region
/// where each exceeds its active threshold. Throws DimensionError for m > 6.
double prob_weakest_first_positive_quadrature(const PopulationModel& model,
                                              double abs_tolerance = 1e-9);

/// Seeded simulation: per trial draw n values, sort by `direction`, apply the
/// clamped additive decay, and count trials where every entry stays > 0.
MonteCarloEstimate prob_positive_montecarlo(const PopulationModel& model, SortDirection direction,
                                            std::uint64_t trials, std::uint64_t seed);

/// Closed form for strongest-first plus quadrature for weakest-first.
PositivityReport positivity_report(const PopulationModel& model);

/// Both strategies by simulation; the two runs share `seed`.
PositivityReport positivity_report_montecarlo(const PopulationModel& model, std::uint64_t trials,
                                              std::uint64_t seed);

}  // namespace rescue
