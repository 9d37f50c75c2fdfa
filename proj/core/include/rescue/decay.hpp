#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "rescue/distribution.hpp"

namespace rescue {

/// Additive decay: the item served at stage i loses per_stage[i] (clamped at
/// zero). per_stage is non-negative and non-decreasing; interval is the
/// spacing T between service start times.
struct AdditiveDecay {
  std::vector<double> per_stage;
  double interval = 1.0;

  friend bool operator==(const AdditiveDecay&, const AdditiveDecay&) = default;
};

/// Multiplicative decay: the item served at stage i keeps factor^(i-1) of its
/// initial probability.
struct MultiplicativeDecay {
  double factor = 0.5;

  friend bool operator==(const MultiplicativeDecay&, const MultiplicativeDecay&) = default;
};

enum class DecayKind { Additive, Multiplicative };

class DecaySpec {
 public:
  static DecaySpec additive(std::vector<double> per_stage, double interval = 1.0);
  /// Additive decay of `rate` per stage over `n` stages.
  static DecaySpec linear(double rate, std::size_t n, double interval = 1.0);
  static DecaySpec multiplicative(double factor);

  DecayKind kind() const noexcept {
    return std::holds_alternative<AdditiveDecay>(law_) ? DecayKind::Additive
                                                       : DecayKind::Multiplicative;
  }
  const AdditiveDecay* as_additive() const noexcept { return std::get_if<AdditiveDecay>(&law_); }
  const MultiplicativeDecay* as_multiplicative() const noexcept {
    return std::get_if<MultiplicativeDecay>(&law_);
  }

  friend bool operator==(const DecaySpec&, const DecaySpec&) = default;

 private:
  explicit DecaySpec(std::variant<AdditiveDecay, MultiplicativeDecay> law) : law_(std::move(law)) {}

  std::variant<AdditiveDecay, MultiplicativeDecay> law_;
};

/// A bijection on {0..n-1}; position i holds the item served at stage i+1.
class Permutation {
 public:
  /// Throws ValidationError unless `order` is a bijection on {0..n-1}, n >= 1.
  explicit Permutation(std::vector<std::size_t> order);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  std::size_t operator[](std::size_t stage) const { return order_[stage]; }
  std::span<const std::size_t> items() const noexcept { return order_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> order_;
};

/// Service order plus start times t_i = (i-1) T.
struct Schedule {
  Permutation order;
  std::vector<double> start_times;
};

Schedule make_schedule(Permutation order, double interval = 1.0);

/// d_i = rate * (i-1), i = 1..n.
std::vector<double> linear_decay_sequence(double rate, std::size_t n);

/// Probabilities rearranged into service order: result[i] = pv[order[i]].
ProbabilityVector arrange(const ProbabilityVector& pv, const Permutation& order);

/// P1(i) = max(P0(i) - d_i, 0) for P0 already in service order.
ProbabilityVector apply_additive(const ProbabilityVector& in_service_order,
                                 std::span<const double> per_stage);

/// P1(i) = P0(i) * factor^(i-1) for P0 already in service order.
ProbabilityVector apply_multiplicative(const ProbabilityVector& in_service_order, double factor);

ProbabilityVector apply_decay(const ProbabilityVector& in_service_order, const DecaySpec& decay);

}  // namespace rescue
