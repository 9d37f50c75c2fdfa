#pragma once

#include <cstddef>
#include <functional>

namespace rescue {

struct QuadratureResult {
  double value;
  double error_estimate;
  std::size_t intervals;
  bool converged;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [lower, upper].
/// The interval with the largest |K15 - G7| is bisected until the summed
/// estimate drops to `abs_tolerance` or `max_intervals` is reached.
/// An empty or reversed range integrates to zero.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lower,
                                    double upper, double abs_tolerance = 1e-9,
                                    std::size_t max_intervals = 500);

}  // namespace rescue
