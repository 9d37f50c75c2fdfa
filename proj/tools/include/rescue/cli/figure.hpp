#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rescue/distribution.hpp"

namespace rescue::cli {

/// n x n grid; cell(i, j) is the probability that person j (people sorted
/// weakest first) is still saved when served at stage i. Indices are 0-based.
class FigureMatrix {
 public:
  FigureMatrix(std::vector<double> initial_sorted, std::vector<double> cells);

  std::size_t size() const noexcept { return initial_.size(); }
  double cell(std::size_t stage, std::size_t person) const {
    return cells_[stage * initial_.size() + person];
  }
  /// Initial probabilities in column order (ascending).
  const std::vector<double>& initial() const noexcept { return initial_; }

 private:
  std::vector<double> initial_;
  std::vector<double> cells_;
};

/// Sorts `initial` ascending and fills cell(i, j) = max(P0(j) - rate*i, 0).
FigureMatrix tabulate_figure_matrix(const ProbabilityVector& initial, double rate);

/// Draws n initial probabilities from Uniform(low, high) with a seeded
/// generator and tabulates them.
FigureMatrix generate_figure_matrix(std::uint64_t seed, std::size_t n, double rate, double low,
                                    double high);

/// One line per stage, six decimals. With `header`, a label row and a
/// leading stage column are added.
std::string to_csv(const FigureMatrix& matrix, bool header = false);

/// One square per cell; side length and darkness both grow linearly with the value.
std::string to_svg(const FigureMatrix& matrix);

}  // namespace rescue::cli
