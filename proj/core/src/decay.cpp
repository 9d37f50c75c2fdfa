#include "rescue/decay.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

#include "rescue/error.hpp"

namespace rescue {

namespace {

void validate_rate(double rate) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw ValidationError("rate", "decay rate must be a finite value >= 0, got " +
                                      std::to_string(rate));
  }
}

void validate_interval(double interval) {
  if (!(interval > 0.0) || !std::isfinite(interval)) {
    throw ValidationError("interval", "interval must be a finite value > 0, got " +
                                          std::to_string(interval));
  }
}

void validate_factor(double factor) {
  if (!(factor > 0.0 && factor < 1.0)) {
    throw ValidationError("factor",
                          "multiplicative factor must lie in (0,1), got " + std::to_string(factor));
  }
}

}  // namespace

DecaySpec DecaySpec::additive(std::vector<double> per_stage, double interval) {
  if (per_stage.empty()) throw ValidationError("per_stage", "at least one stage is required");
  for (std::size_t i = 0; i < per_stage.size(); ++i) {
    const double d = per_stage[i];
    if (!(d >= 0.0) || !std::isfinite(d)) {
      throw ValidationError("per_stage[" + std::to_string(i) + "]",
                            "decay must be a finite value >= 0, got " + std::to_string(d));
    }
    if (i > 0 && d < per_stage[i - 1]) {
      throw ValidationError("per_stage[" + std::to_string(i) + "]",
                            "decay sequence must be non-decreasing");
    }
  }
  validate_interval(interval);
  return DecaySpec(AdditiveDecay{std::move(per_stage), interval});
}

DecaySpec DecaySpec::linear(double rate, std::size_t n, double interval) {
  return additive(linear_decay_sequence(rate, n), interval);
}

DecaySpec DecaySpec::multiplicative(double factor) {
  validate_factor(factor);
  return DecaySpec(MultiplicativeDecay{factor});
}

Permutation::Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
  if (order_.empty()) throw ValidationError("order", "permutation must not be empty");
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const std::size_t item = order_[i];
    if (item >= order_.size()) {
      throw ValidationError("order[" + std::to_string(i) + "]",
                            "item index " + std::to_string(item) + " out of range");
    }
    if (seen[item]) {
      throw ValidationError("order[" + std::to_string(i) + "]",
                            "item index " + std::to_string(item) + " repeated");
    }
    seen[item] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Permutation(std::move(order));
}

Schedule make_schedule(Permutation order, double interval) {
  validate_interval(interval);
  std::vector<double> times(order.size());
  for (std::size_t i = 0; i < times.size(); ++i) times[i] = static_cast<double>(i) * interval;
  return Schedule{std::move(order), std::move(times)};
}

std::vector<double> linear_decay_sequence(double rate, std::size_t n) {
  validate_rate(rate);
  if (n == 0) throw ValidationError("n", "stage count must be >= 1");
  std::vector<double> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = rate * static_cast<double>(i);
  return seq;
}

ProbabilityVector arrange(const ProbabilityVector& pv, const Permutation& order) {
  if (order.size() != pv.size()) {
    throw ValidationError("order", "permutation length " + std::to_string(order.size()) +
                                       " does not match " + std::to_string(pv.size()) + " items");
  }
  std::vector<double> out(pv.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = pv[order[i]];
  return ProbabilityVector(std::move(out));
}

ProbabilityVector apply_additive(const ProbabilityVector& in_service_order,
                                 std::span<const double> per_stage) {
  if (per_stage.size() != in_service_order.size()) {
    throw ValidationError("per_stage", "decay sequence length " + std::to_string(per_stage.size()) +
                                           " does not match " +
                                           std::to_string(in_service_order.size()) + " items");
  }
  std::vector<double> out(per_stage.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::max(in_service_order[i] - per_stage[i], 0.0);
    // Decay only ever lowers a probability, so no upper clamp is needed.
    assert(out[i] <= in_service_order[i]);
  }
  return ProbabilityVector(std::move(out));
}

ProbabilityVector apply_multiplicative(const ProbabilityVector& in_service_order, double factor) {
  validate_factor(factor);
  std::vector<double> out(in_service_order.size());
  double scale = 1.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = in_service_order[i] * scale;
    scale *= factor;
  }
  return ProbabilityVector(std::move(out));
}

ProbabilityVector apply_decay(const ProbabilityVector& in_service_order, const DecaySpec& decay) {
  if (const auto* add = decay.as_additive()) return apply_additive(in_service_order, add->per_stage);
  return apply_multiplicative(in_service_order, decay.as_multiplicative()->factor);
}

}  // namespace rescue
