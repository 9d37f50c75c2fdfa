#include "rescue/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace rescue {

namespace {

// Kronrod abscissae on [0,1] mirrored about zero; odd indices are the Gauss points.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lower;
  double upper;
  double value;
  double error;

  bool operator<(const Segment& other) const noexcept { return error < other.error; }
};

Segment gauss_kronrod_15(const std::function<double(double)>& f, double lower, double upper) {
  const double center = 0.5 * (lower + upper);
  const double half = 0.5 * (upper - lower);

  const double f_center = f(center);
  double kronrod = kKronrodWeights[7] * f_center;
  double gauss = kGaussWeights[3] * f_center;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return Segment{lower, upper, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lower,
                                    double upper, double abs_tolerance,
                                    std::size_t max_intervals) {
  if (!(upper > lower)) return QuadratureResult{0.0, 0.0, 0, true};

  std::priority_queue<Segment> worst_first;
  Segment whole = gauss_kronrod_15(f, lower, upper);
  double value = whole.value;
  double error = whole.error;
  worst_first.push(whole);

  while (error > abs_tolerance && worst_first.size() < max_intervals) {
    const Segment worst = worst_first.top();
    worst_first.pop();
    const double mid = 0.5 * (worst.lower + worst.upper);
    if (!(mid > worst.lower && mid < worst.upper)) {
      // Interval cannot be split further in double precision.
      worst_first.push(worst);
      break;
    }
    const Segment left = gauss_kronrod_15(f, worst.lower, mid);
    const Segment right = gauss_kronrod_15(f, mid, worst.upper);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    worst_first.push(left);
    worst_first.push(right);
  }

  // Re-sum to shed drift from the incremental updates.
  double total = 0.0;
  double total_error = 0.0;
  const std::size_t count = worst_first.size();
  while (!worst_first.empty()) {
    total += worst_first.top().value;
    total_error += worst_first.top().error;
    worst_first.pop();
  }
  return QuadratureResult{total, total_error, count, total_error <= abs_tolerance};
}

}  // namespace rescue
