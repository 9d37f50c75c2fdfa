#pragma once

// Reference computations used only by the tests. Each one takes a route that
// is independent of the library code it is compared against.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace rescue::testing {

/// P(Y = k) by summing the probability of every one of the 2^n outcome patterns.
inline std::vector<double> enumerate_success_pmf(const std::vector<double>& probs) {
  const std::size_t n = probs.size();
  std::vector<double> pmf(n + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double weight = 1.0;
    std::size_t successes = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        weight *= probs[i];
        ++successes;
      } else {
        weight *= 1.0 - probs[i];
      }
    }
    pmf[successes] += weight;
  }
  return pmf;
}

/// Calls visit(order) for every permutation of {0..n-1} via Heap's algorithm
/// (a different enumeration order from std::next_permutation).
inline void for_each_permutation(std::size_t n,
                                 const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> counter(n, 0);
  visit(order);
  std::size_t i = 1;
  while (i < n) {
    if (counter[i] < i) {
      std::swap(order[i % 2 == 0 ? 0 : counter[i]], order[i]);
      visit(order);
      ++counter[i];
      i = 1;
    } else {
      counter[i] = 0;
      ++i;
    }
  }
}

/// At-service probabilities written out directly from the model definitions.
inline std::vector<double> additive_at_service(const std::vector<double>& p0,
                                               const std::vector<std::size_t>& order, double rate) {
  std::vector<double> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.push_back(std::max(p0[order[i]] - rate * static_cast<double>(i), 0.0));
  }
  return out;
}

inline std::vector<double> multiplicative_at_service(const std::vector<double>& p0,
                                                     const std::vector<std::size_t>& order,
                                                     double factor) {
  std::vector<double> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.push_back(p0[order[i]] * std::pow(factor, static_cast<double>(i)));
  }
  return out;
}

struct Range {
  double min = INFINITY;
  double max = -INFINITY;
};

/// Min and max of `score(order)` over all n! orders.
inline Range objective_range(std::size_t n,
                             const std::function<double(const std::vector<std::size_t>&)>& score) {
  Range r;
  for_each_permutation(n, [&](const std::vector<std::size_t>& order) {
    const double v = score(order);
    r.min = std::min(r.min, v);
    r.max = std::max(r.max, v);
  });
  return r;
}

/// Order-statistic constraint X_(rank) > threshold (rank 1-based, smallest first).
struct OrderConstraint {
  std::size_t rank;
  double threshold;
};

/// Exact probability that n i.i.d. Uniform(low, high) draws satisfy every
/// constraint. X_(r) > c is the same as "at most r-1 draws fall at or below c",
/// so the support is cut at the thresholds and the multinomial cell counts are
/// summed by dynamic programming over cumulative counts.
inline double order_constraint_probability(std::size_t n, double low, double high,
                                           const std::vector<OrderConstraint>& constraints) {
  std::map<double, std::size_t> cap;  // cut point -> max draws allowed at or below it
  for (const OrderConstraint& c : constraints) {
    if (c.threshold <= low) continue;
    if (c.threshold >= high) return 0.0;
    const std::size_t allowed = c.rank - 1;
    auto [it, inserted] = cap.emplace(c.threshold, allowed);
    if (!inserted) it->second = std::min(it->second, allowed);
  }

  // dp[s] = sum over cell counts with cumulative total s of prod q^l / l!
  std::vector<double> dp(n + 1, 0.0);
  dp[0] = 1.0;
  double left = low;
  auto absorb_cell = [&](double right, std::size_t limit) {
    const double q = (right - left) / (high - low);
    std::vector<double> next(n + 1, 0.0);
    for (std::size_t s = 0; s <= n; ++s) {
      if (dp[s] == 0.0) continue;
      double term = 1.0;  // q^l / l!
      for (std::size_t l = 0; s + l <= std::min(n, limit); ++l) {
        next[s + l] += dp[s] * term;
        term *= q / static_cast<double>(l + 1);
      }
    }
    dp = std::move(next);
    left = right;
  };
  for (const auto& [cut, limit] : cap) absorb_cell(cut, limit);
  absorb_cell(high, n);

  double factorial = 1.0;
  for (std::size_t k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
  return factorial * dp[n];
}

/// Weakest-first: the k-th smallest draw serves at stage k and must exceed step*(k-1).
inline double weakest_first_oracle(std::size_t n, double low, double high, double step) {
  std::vector<OrderConstraint> constraints;
  for (std::size_t k = 1; k <= n; ++k) {
    constraints.push_back({k, step * static_cast<double>(k - 1)});
  }
  return order_constraint_probability(n, low, high, constraints);
}

/// Strongest-first: the k-th largest draw, X_(n+1-k), serves at stage k.
inline double strongest_first_oracle(std::size_t n, double low, double high, double step) {
  std::vector<OrderConstraint> constraints;
  for (std::size_t k = 1; k <= n; ++k) {
    constraints.push_back({n + 1 - k, step * static_cast<double>(k - 1)});
  }
  return order_constraint_probability(n, low, high, constraints);
}

/// Random probability vector with entries in [0,1] and length in [min_n, max_n].
inline std::vector<double> random_probabilities(std::mt19937_64& rng, std::size_t min_n,
                                                std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> length(min_n, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> probs(length(rng));
  for (double& p : probs) p = unit(rng);
  return probs;
}

}  // namespace rescue::testing
