#include "rescue/scheduler.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "rescue/error.hpp"

namespace rescue {

std::string_view to_string(Objective objective) noexcept {
  return objective == Objective::ExpectedSuccesses ? "expected" : "all";
}

std::string_view to_string(SortDirection direction) noexcept {
  return direction == SortDirection::Ascending ? "ascending" : "descending";
}

std::string_view to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::Ascending:
      return "ascending";
    case Strategy::Descending:
      return "descending";
    case Strategy::Any:
      break;
  }
  return "any";
}

namespace {

void check_decay_length(const ProbabilityVector& p0, const DecaySpec& decay) {
  if (const auto* add = decay.as_additive(); add && add->per_stage.size() != p0.size()) {
    throw ValidationError("per_stage", "decay sequence has " + std::to_string(add->per_stage.size()) +
                                           " stages for " + std::to_string(p0.size()) + " items");
  }
}

// Writes at-service probabilities for `order` into `out` without allocating.
void decayed_in_order(std::span<const double> p0, std::span<const std::size_t> order,
                      const DecaySpec& decay, std::span<double> out) {
  if (const auto* add = decay.as_additive()) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      out[i] = std::max(p0[order[i]] - add->per_stage[i], 0.0);
    }
    return;
  }
  const double factor = decay.as_multiplicative()->factor;
  double scale = 1.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out[i] = p0[order[i]] * scale;
    scale *= factor;
  }
}

double score(std::span<const double> at_service, Objective objective) noexcept {
  return objective == Objective::ExpectedSuccesses ? detail::sum_in_order(at_service)
                                                   : detail::product_in_order(at_service);
}

}  // namespace

Permutation sort_order(const ProbabilityVector& p0, SortDirection direction) {
  std::vector<std::size_t> order(p0.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (direction == SortDirection::Ascending) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p0[a] < p0[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p0[a] > p0[b]; });
  }
  return Permutation(std::move(order));
}

ScheduleMetrics evaluate_order(const ProbabilityVector& p0, const Permutation& order,
                               const DecaySpec& decay) {
  check_decay_length(p0, decay);
  const ProbabilityVector at_service = apply_decay(arrange(p0, order), decay);
  return ScheduleMetrics{expected_successes(at_service), prob_all_success(at_service),
                         success_count_pmf(at_service)};
}

double objective_value(const ProbabilityVector& p0, const Permutation& order,
                       const DecaySpec& decay, Objective objective) {
  check_decay_length(p0, decay);
  if (order.size() != p0.size()) {
    throw ValidationError("order", "permutation length does not match item count");
  }
  std::vector<double> at_service(p0.size());
  decayed_in_order(p0.values(), order.items(), decay, at_service);
  return score(at_service, objective);
}

OptimalOrder brute_force_optimal(const ProbabilityVector& p0, const DecaySpec& decay,
                                 Objective objective) {
  if (p0.size() > kMaxBruteForceItems) {
    throw SizeError("brute force search is limited to " + std::to_string(kMaxBruteForceItems) +
                    " items, got " + std::to_string(p0.size()));
  }
  check_decay_length(p0, decay);

  std::vector<std::size_t> order(p0.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> at_service(p0.size());

  std::vector<std::size_t> best_order = order;
  decayed_in_order(p0.values(), order, decay, at_service);
  double best = score(at_service, objective);
  while (std::next_permutation(order.begin(), order.end())) {
    decayed_in_order(p0.values(), order, decay, at_service);
    const double value = score(at_service, objective);
    if (value > best) {
      best = value;
      best_order = order;
    }
  }
  return OptimalOrder{Permutation(std::move(best_order)), best};
}

Strategy recommended_order(const DecaySpec& decay, Objective objective) noexcept {
  if (objective == Objective::ExpectedSuccesses) return Strategy::Descending;
  return decay.kind() == DecayKind::Additive ? Strategy::Ascending : Strategy::Any;
}

}  // namespace rescue
