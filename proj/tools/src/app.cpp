#include "rescue/cli/app.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "rescue/analysis.hpp"
#include "rescue/cli/figure.hpp"
#include "rescue/cli/scenario.hpp"
#include "rescue/decay.hpp"
#include "rescue/error.hpp"
#include "rescue/scheduler.hpp"

namespace rescue::cli {

using nlohmann::json;

namespace {

enum class Format { Text, Structured };

std::string num(double value, int digits = 10) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ' ';
    out += parts[i];
  }
  return out;
}

std::string join_numbers(std::span<const double> values) {
  std::vector<std::string> parts;
  for (double v : values) parts.push_back(num(v));
  return join(parts);
}

std::vector<std::size_t> one_based(const Permutation& order) {
  std::vector<std::size_t> labels;
  for (std::size_t item : order.items()) labels.push_back(item + 1);
  return labels;
}

std::string join_labels(const Permutation& order) {
  std::vector<std::string> parts;
  for (std::size_t label : one_based(order)) parts.push_back(std::to_string(label));
  return join(parts);
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path);
  if (!file) throw ValidationError("scenario", "cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write \"" + path + "\"");
  file << contents;
  if (!file) throw std::runtime_error("failed writing \"" + path + "\"");
}

Permutation parse_order(const std::string& spec, const ProbabilityVector& p0) {
  if (spec == "identity") return Permutation::identity(p0.size());
  if (spec == "ascending") return sort_order(p0, SortDirection::Ascending);
  if (spec == "descending") return sort_order(p0, SortDirection::Descending);

  std::vector<std::size_t> order;
  std::stringstream stream(spec);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t consumed = 0;
    long long label = 0;
    try {
      label = std::stoll(token, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed == 0 || consumed != token.size() || label < 1) {
      throw ValidationError("order", "expected identity, ascending, descending or a comma "
                                     "separated list of 1-based item labels, got \"" + spec + "\"");
    }
    order.push_back(static_cast<std::size_t>(label - 1));
  }
  if (order.size() != p0.size()) {
    throw ValidationError("order", "lists " + std::to_string(order.size()) + " items, scenario has " +
                                       std::to_string(p0.size()));
  }
  return Permutation(std::move(order));
}

json model_json(const PopulationModel& model) {
  return {{"n", model.n}, {"low", model.low}, {"high", model.high}, {"decay", model.decay_step}};
}

void add_model_options(CLI::App* cmd, PopulationModel& model) {
  cmd->add_option("--n", model.n, "Number of items")->capture_default_str();
  cmd->add_option("--decay", model.decay_step, "Probability lost per stage")->capture_default_str();
  cmd->add_option("--low", model.low, "Lower bound of initial probabilities")->capture_default_str();
  cmd->add_option("--high", model.high, "Upper bound of initial probabilities")
      ->capture_default_str();
}

void add_format_option(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"structured", Format::Structured}}))
      ->capture_default_str();
}

struct Options {
  std::string scenario;
  std::string order = "identity";
  std::string objective;
  std::string method;
  PopulationModel model;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 20180623;
  std::vector<std::string> out_paths;
  bool header = false;
  Format format = Format::Text;
};

int cmd_evaluate(const Options& opt, std::istream& in, std::ostream& out) {
  const ScenarioConfig config = parse_scenario(read_source(opt.scenario, in));
  const Permutation order = parse_order(opt.order, config.probabilities);
  const double interval =
      config.decay.as_additive() ? config.decay.as_additive()->interval : 1.0;
  const Schedule schedule = make_schedule(order, interval);
  const ProbabilityVector at_service =
      apply_decay(arrange(config.probabilities, order), config.decay);
  const ScheduleMetrics metrics = evaluate_order(config.probabilities, order, config.decay);

  if (opt.format == Format::Structured) {
    json doc = {{"command", "evaluate"},
                {"order", one_based(order)},
                {"start_times", schedule.start_times},
                {"at_service", std::vector<double>(at_service.values().begin(),
                                                   at_service.values().end())},
                {"expected_successes", metrics.expected_successes},
                {"prob_all_success", metrics.prob_all_success},
                {"pmf", std::vector<double>(metrics.pmf.mass().begin(), metrics.pmf.mass().end())}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "order: " << join_labels(order) << '\n'
      << "start_times: " << join_numbers(schedule.start_times) << '\n'
      << "at_service: " << join_numbers(at_service.values()) << '\n'
      << "expected_successes: " << num(metrics.expected_successes) << '\n'
      << "prob_all_success: " << num(metrics.prob_all_success) << '\n'
      << "pmf: " << join_numbers(metrics.pmf.mass()) << '\n';
  return kExitOk;
}

int cmd_optimize(const Options& opt, std::istream& in, std::ostream& out) {
  const ScenarioConfig config = parse_scenario(read_source(opt.scenario, in));
  const Objective objective = opt.objective.empty() ? config.objective : parse_objective(opt.objective);
  std::string method = opt.method;
  if (method.empty()) {
    method = config.probabilities.size() <= kMaxBruteForceItems ? "brute" : "sort";
  }
  const Strategy strategy = recommended_order(config.decay, objective);

  std::optional<OptimalOrder> result;
  if (method == "brute") {
    result = brute_force_optimal(config.probabilities, config.decay, objective);
  } else if (method == "sort") {
    Permutation order = strategy == Strategy::Any
                            ? Permutation::identity(config.probabilities.size())
                            : sort_order(config.probabilities, strategy == Strategy::Ascending
                                                                   ? SortDirection::Ascending
                                                                   : SortDirection::Descending);
    const double value = objective_value(config.probabilities, order, config.decay, objective);
    result = OptimalOrder{std::move(order), value};
  } else {
    throw ValidationError("method", "expected \"brute\" or \"sort\", got \"" + method + "\"");
  }

  if (opt.format == Format::Structured) {
    json doc = {{"command", "optimize"},
                {"method", method},
                {"objective", std::string(to_string(objective))},
                {"recommended", std::string(to_string(strategy))},
                {"order", one_based(result->order)},
                {"value", result->value}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "method: " << method << '\n'
      << "objective: " << to_string(objective) << '\n'
      << "recommended: " << to_string(strategy) << '\n'
      << "order: " << join_labels(result->order) << '\n'
      << "value: " << num(result->value) << '\n';
  return kExitOk;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
  const MonteCarloEstimate strongest =
      prob_positive_montecarlo(opt.model, SortDirection::Descending, opt.trials, opt.seed);
  const MonteCarloEstimate weakest =
      prob_positive_montecarlo(opt.model, SortDirection::Ascending, opt.trials, opt.seed);

  const auto estimate_json = [](const MonteCarloEstimate& e) {
    return json{{"estimate", e.estimate}, {"std_error", e.std_error}, {"successes", e.successes}};
  };
  if (opt.format == Format::Structured) {
    json doc = {{"command", "simulate"},
                {"model", model_json(opt.model)},
                {"method", std::string(to_string(PositivityMethod::MonteCarlo))},
                {"trials", opt.trials},
                {"seed", opt.seed},
                {"strongest_first", estimate_json(strongest)},
                {"weakest_first", estimate_json(weakest)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "trials: " << opt.trials << "  seed: " << opt.seed << '\n'
      << "strongest_first_positive: " << num(strongest.estimate) << " +/- "
      << num(strongest.std_error, 3) << '\n'
      << "weakest_first_positive: " << num(weakest.estimate) << " +/- "
      << num(weakest.std_error, 3) << '\n';
  return kExitOk;
}

int cmd_positivity(const Options& opt, std::ostream& out) {
  const PositivityReport report = positivity_report(opt.model);
  const std::vector<Threshold> active = active_thresholds(opt.model);

  if (opt.format == Format::Structured) {
    json thresholds = json::array();
    for (const Threshold& t : active) {
      thresholds.push_back({{"rank", t.rank}, {"threshold", t.threshold}});
    }
    json doc = {{"command", "positivity"},
                {"model", model_json(opt.model)},
                {"method", std::string(to_string(report.method))},
                {"strongest_first_positive", report.prob_strongest_first_positive},
                {"weakest_first_positive", report.prob_weakest_first_positive},
                {"active_thresholds", thresholds}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::string> thresholds;
  for (const Threshold& t : active) {
    thresholds.push_back(std::to_string(t.rank) + ":" + num(t.threshold));
  }
  out << "strongest_first_positive: " << num(report.prob_strongest_first_positive, 3) << " ("
      << num(report.prob_strongest_first_positive, 12) << ", analytic)\n"
      << "weakest_first_positive: " << num(report.prob_weakest_first_positive, 7) << " ("
      << num(report.prob_weakest_first_positive, 12) << ", quadrature)\n"
      << "active_thresholds: " << (thresholds.empty() ? "none" : join(thresholds)) << '\n';
  return kExitOk;
}

int cmd_figure(const Options& opt, std::ostream& out) {
  const FigureMatrix matrix =
      generate_figure_matrix(opt.seed, opt.model.n, opt.model.decay_step, opt.model.low, opt.model.high);
  for (const std::string& path : opt.out_paths) {
    const bool svg = path.size() >= 4 && path.compare(path.size() - 4, 4, ".svg") == 0;
    write_file(path, svg ? to_svg(matrix) : to_csv(matrix, opt.header));
  }

  if (opt.format == Format::Structured) {
    json rows = json::array();
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < matrix.size(); ++j) row.push_back(matrix.cell(i, j));
      rows.push_back(std::move(row));
    }
    json doc = {{"command", "figure"},
                {"model", model_json(opt.model)},
                {"seed", opt.seed},
                {"initial", matrix.initial()},
                {"cells", rows},
                {"written", opt.out_paths}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  if (opt.out_paths.empty()) {
    out << to_csv(matrix, opt.header);
  } else {
    for (const std::string& path : opt.out_paths) out << "wrote " << path << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Service-order evaluation for items whose success probability decays while waiting"};
  app.name("rescue");
  app.require_subcommand(1);

  Options opt;

  auto* evaluate = app.add_subcommand("evaluate", "Metrics for one service order");
  evaluate->add_option("--scenario", opt.scenario, "Scenario JSON file, or - for stdin")->required();
  evaluate->add_option("--order", opt.order,
                       "identity, ascending, descending, or 1-based labels like 3,4,1,2")
      ->capture_default_str();
  add_format_option(evaluate, opt.format);

  auto* optimize = app.add_subcommand("optimize", "Best service order for an objective");
  optimize->add_option("--scenario", opt.scenario, "Scenario JSON file, or - for stdin")->required();
  optimize->add_option("--objective", opt.objective, "expected|all (default: from scenario)");
  optimize->add_option("--method", opt.method, "brute|sort (default: brute when n <= 10)");
  add_format_option(optimize, opt.format);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo positivity estimates");
  add_model_options(simulate, opt.model);
  simulate->add_option("--trials", opt.trials, "Number of simulated populations")
      ->capture_default_str();
  simulate->add_option("--seed", opt.seed, "Generator seed")->capture_default_str();
  add_format_option(simulate, opt.format);

  auto* positivity = app.add_subcommand("positivity", "Closed-form and quadrature positivity");
  add_model_options(positivity, opt.model);
  add_format_option(positivity, opt.format);

  auto* figure = app.add_subcommand("figure", "Stage-by-person probability matrix");
  add_model_options(figure, opt.model);
  figure->add_option("--seed", opt.seed, "Generator seed")->capture_default_str();
  figure->add_option("--out", opt.out_paths, "Output path; *.svg gets the heatmap, else CSV");
  figure->add_flag("--header", opt.header, "Add stage/person labels to the CSV");
  add_format_option(figure, opt.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*evaluate) return cmd_evaluate(opt, in, out);
    if (*optimize) return cmd_optimize(opt, in, out);
    if (*simulate) return cmd_simulate(opt, out);
    if (*positivity) return cmd_positivity(opt, out);
    return cmd_figure(opt, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << " (try the simulate subcommand)\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace rescue::cli
