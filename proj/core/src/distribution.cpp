#include "rescue/distribution.hpp"

#include <cmath>
#include <string>

#include "rescue/error.hpp"

namespace rescue {

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw ValidationError("probabilities", "at least one probability is required");
  }
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("probabilities[" + std::to_string(i) + "]",
                            "value " + std::to_string(p) + " outside [0,1]");
    }
  }
}

double SuccessCountPmf::mean() const noexcept {
  double m = 0.0;
  for (std::size_t k = 1; k < mass_.size(); ++k) m += static_cast<double>(k) * mass_[k];
  return m;
}

double SuccessCountPmf::total() const noexcept {
  double s = 0.0;
  for (double v : mass_) s += v;
  return s;
}

SuccessCountPmf success_count_pmf(const ProbabilityVector& pv) {
  // mass[k] after processing j trials = coefficient of z^k in the partial product.
  std::vector<double> mass(pv.size() + 1, 0.0);
  mass[0] = 1.0;
  std::size_t degree = 0;
  for (double p : pv.values()) {
    const double q = 1.0 - p;
    ++degree;
    mass[degree] = mass[degree - 1] * p;
    for (std::size_t k = degree - 1; k > 0; --k) {
      mass[k] = mass[k] * q + mass[k - 1] * p;
    }
    mass[0] *= q;
  }
  return SuccessCountPmf(std::move(mass));
}

double expected_successes(const ProbabilityVector& pv) { return detail::sum_in_order(pv.values()); }

double prob_all_success(const ProbabilityVector& pv) {
  return detail::product_in_order(pv.values());
}

namespace detail {

double sum_in_order(std::span<const double> values) noexcept {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

double product_in_order(std::span<const double> values) noexcept {
  double p = 1.0;
  for (double v : values) p *= v;
  return p;
}

}  // namespace detail
}  // namespace rescue
