#include "rescue/cli/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "rescue/analysis.hpp"
#include "rescue/decay.hpp"
#include "rescue/error.hpp"
#include "rescue/random.hpp"

namespace rescue::cli {

FigureMatrix::FigureMatrix(std::vector<double> initial_sorted, std::vector<double> cells)
    : initial_(std::move(initial_sorted)), cells_(std::move(cells)) {
  if (cells_.size() != initial_.size() * initial_.size()) {
    throw ValidationError("cells", "figure matrix must be square");
  }
}

FigureMatrix tabulate_figure_matrix(const ProbabilityVector& initial, double rate) {
  std::vector<double> sorted(initial.values().begin(), initial.values().end());
  std::sort(sorted.begin(), sorted.end());
  const std::vector<double> decay = linear_decay_sequence(rate, sorted.size());

  const std::size_t n = sorted.size();
  std::vector<double> cells(n * n);
  for (std::size_t stage = 0; stage < n; ++stage) {
    for (std::size_t person = 0; person < n; ++person) {
      cells[stage * n + person] = std::max(sorted[person] - decay[stage], 0.0);
    }
  }
  return FigureMatrix(std::move(sorted), std::move(cells));
}

FigureMatrix generate_figure_matrix(std::uint64_t seed, std::size_t n, double rate, double low,
                                    double high) {
  PopulationModel{n, low, high, rate}.validate();
  SeededRng rng(seed);
  std::vector<double> draws(n);
  for (double& v : draws) v = rng.uniform(low, high);
  return tabulate_figure_matrix(ProbabilityVector(std::move(draws)), rate);
}

std::string to_csv(const FigureMatrix& matrix, bool header) {
  const std::size_t n = matrix.size();
  std::string out;
  char buf[32];
  if (header) {
    out += "stage";
    for (std::size_t j = 0; j < n; ++j) out += ",person_" + std::to_string(j + 1);
    out += '\n';
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (header) out += std::to_string(i + 1) + ",";
    for (std::size_t j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof(buf), "%.6f", matrix.cell(i, j));
      if (j > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string to_svg(const FigureMatrix& matrix) {
  constexpr double kCell = 32.0;
  constexpr double kMargin = 48.0;
  const std::size_t n = matrix.size();
  const double extent = kMargin + kCell * static_cast<double>(n) + 8.0;

  std::ostringstream svg;
  svg.setf(std::ios::fixed);
  svg.precision(3);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << extent << "\" height=\"" << extent
      << "\" viewBox=\"0 0 " << extent << ' ' << extent << "\">\n"
      << "  <title>Success probability by service stage (rows) and person (columns)</title>\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "  <g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (std::size_t k = 0; k < n; ++k) {
    const double centre = kMargin + kCell * (static_cast<double>(k) + 0.5);
    svg << "    <text x=\"" << centre << "\" y=\"" << kMargin - 8.0 << "\">" << k + 1
        << "</text>\n"
        << "    <text x=\"" << kMargin - 14.0 << "\" y=\"" << centre + 3.0 << "\">" << k + 1
        << "</text>\n";
  }
  svg << "  </g>\n  <g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double value = matrix.cell(i, j);
      const double side = 0.9 * kCell * value;
      const double x = kMargin + kCell * (static_cast<double>(j) + 0.5) - side / 2.0;
      const double y = kMargin + kCell * (static_cast<double>(i) + 0.5) - side / 2.0;
      const int grey = static_cast<int>(std::lround(255.0 * (1.0 - value)));
      svg << "    <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << side << "\" height=\""
          << side << "\" fill=\"rgb(" << grey << ',' << grey << ',' << grey << ")\"/>\n";
    }
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace rescue::cli
