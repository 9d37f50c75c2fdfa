#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rescue {

/// Ordered per-item success probabilities, each in [0,1], length >= 1.
/// Holds initial probabilities as well as decayed at-service probabilities.
class ProbabilityVector {
 public:
  /// Throws ValidationError on an empty list or an entry outside [0,1]
  /// (NaN included).
  explicit ProbabilityVector(std::vector<double> probs);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> values() const noexcept { return probs_; }

  friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

 private:
  std::vector<double> probs_;
};

/// Distribution of the number of successes Y among independent trials;
/// mass()[k] = P(Y = k) for k = 0..n.
class SuccessCountPmf {
 public:
  explicit SuccessCountPmf(std::vector<double> mass) : mass_(std::move(mass)) {}

  std::span<const double> mass() const noexcept { return mass_; }
  std::size_t trials() const noexcept { return mass_.size() - 1; }
  double operator[](std::size_t k) const { return mass_[k]; }

  double mean() const noexcept;
  double total() const noexcept;

 private:
  std::vector<double> mass_;
};

/// Coefficients of prod_i (1 - p_i + p_i z), by iterative convolution.
SuccessCountPmf success_count_pmf(const ProbabilityVector& pv);

/// E(Y) = sum of p_i. Independent of the order of the entries.
double expected_successes(const ProbabilityVector& pv);

/// P(Y = n) = product of p_i. Independent of the order of the entries.
double prob_all_success(const ProbabilityVector& pv);

namespace detail {
// Left-to-right accumulation shared by the metrics and the permutation search,
// so both produce bit-identical values for the same service order.
double sum_in_order(std::span<const double> values) noexcept;
double product_in_order(std::span<const double> values) noexcept;
}  // namespace detail

}  // namespace rescue
