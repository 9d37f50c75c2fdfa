#pragma once

#include <cstddef>
#include <string_view>

#include "rescue/decay.hpp"
#include "rescue/distribution.hpp"

namespace rescue {

enum class Objective { ExpectedSuccesses, ProbAllSuccess };
enum class SortDirection { Ascending, Descending };
enum class Strategy { Ascending, Descending, Any };

std::string_view to_string(Objective objective) noexcept;
std::string_view to_string(SortDirection direction) noexcept;
std::string_view to_string(Strategy strategy) noexcept;

struct ScheduleMetrics {
  double expected_successes;
  double prob_all_success;
  SuccessCountPmf pmf;
};

struct OptimalOrder {
  Permutation order;
  double value;
};

/// Largest item count brute_force_optimal will enumerate (10! orders).
inline constexpr std::size_t kMaxBruteForceItems = 10;

/// Items ordered by initial probability; ties keep their original relative order.
Permutation sort_order(const ProbabilityVector& p0, SortDirection direction);

/// Serves items in `order`, applies `decay` by stage, and reports the metrics
/// of the resulting at-service probabilities.
ScheduleMetrics evaluate_order(const ProbabilityVector& p0, const Permutation& order,
                               const DecaySpec& decay);

/// Objective value of one order; same arithmetic as evaluate_order.
double objective_value(const ProbabilityVector& p0, const Permutation& order,
                       const DecaySpec& decay, Objective objective);

/// Exhaustive search over all n! orders in lexicographic order. Returns the
/// first order reaching the maximum (the lexicographically smallest argmax).
/// Throws SizeError when n > kMaxBruteForceItems.
OptimalOrder brute_force_optimal(const ProbabilityVector& p0, const DecaySpec& decay,
                                 Objective objective);

/// Ordering rule for each decay law and objective:
///   additive       + all-success -> ascending (weakest first)
///   additive       + expected    -> descending (never worse; strictly better once clamping bites)
///   multiplicative + expected    -> descending
///   multiplicative + all-success -> any (product is order independent)
Strategy recommended_order(const DecaySpec& decay, Objective objective) noexcept;

}  // namespace rescue
