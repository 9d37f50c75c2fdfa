#include "rescue/cli/scenario.hpp"

#include <json.hpp>
#include <optional>
#include <set>
#include <vector>

#include "rescue/error.hpp"

namespace rescue::cli {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& object, const std::string& where,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      throw ValidationError(where.empty() ? key : where + "." + key, "unknown key");
    }
  }
}

double number_at(const json& value, const std::string& field) {
  if (!value.is_number()) throw ValidationError(field, "expected a number");
  return value.get<double>();
}

std::vector<double> numbers_at(const json& value, const std::string& field) {
  if (!value.is_array()) throw ValidationError(field, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(number_at(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Re-raises a validation error with its field qualified by `prefix`.
template <typename Fn>
auto qualified(const std::string& prefix, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    throw ValidationError(prefix + "." + e.field(), what.substr(e.field().size() + 2));
  }
}

DecaySpec parse_decay(const json& decay, std::size_t n) {
  if (!decay.is_object()) throw ValidationError("decay", "expected an object");
  if (!decay.contains("type")) throw ValidationError("decay.type", "missing");
  if (!decay["type"].is_string()) throw ValidationError("decay.type", "expected a string");
  const std::string type = decay["type"].get<std::string>();

  if (type == "multiplicative") {
    reject_unknown_keys(decay, "decay", {"type", "factor"});
    if (!decay.contains("factor")) throw ValidationError("decay.factor", "missing");
    const double factor = number_at(decay["factor"], "decay.factor");
    return qualified("decay", [&] { return DecaySpec::multiplicative(factor); });
  }
  if (type != "additive") {
    throw ValidationError("decay.type", "expected \"additive\" or \"multiplicative\", got \"" +
                                            type + "\"");
  }

  reject_unknown_keys(decay, "decay", {"type", "rate", "per_stage", "interval"});
  const double interval =
      decay.contains("interval") ? number_at(decay["interval"], "decay.interval") : 1.0;
  const bool has_rate = decay.contains("rate");
  const bool has_stages = decay.contains("per_stage");
  if (has_rate == has_stages) {
    throw ValidationError("decay", "additive decay needs exactly one of \"rate\" or \"per_stage\"");
  }
  if (has_rate) {
    const double rate = number_at(decay["rate"], "decay.rate");
    return qualified("decay", [&] { return DecaySpec::linear(rate, n, interval); });
  }
  std::vector<double> stages = numbers_at(decay["per_stage"], "decay.per_stage");
  if (stages.size() != n) {
    throw ValidationError("decay.per_stage", "has " + std::to_string(stages.size()) +
                                                 " entries for " + std::to_string(n) + " items");
  }
  return qualified("decay", [&] { return DecaySpec::additive(std::move(stages), interval); });
}

}  // namespace

Objective parse_objective(std::string_view name) {
  if (name == "expected") return Objective::ExpectedSuccesses;
  if (name == "all") return Objective::ProbAllSuccess;
  throw ValidationError("objective",
                        "expected \"expected\" or \"all\", got \"" + std::string(name) + "\"");
}

ScenarioConfig parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("scenario", "malformed document at byte " + std::to_string(e.byte) +
                                          ": " + e.what());
  }
  if (!doc.is_object()) throw ValidationError("scenario", "expected a JSON object");
  reject_unknown_keys(doc, "", {"probabilities", "decay", "objective"});

  if (!doc.contains("probabilities")) throw ValidationError("probabilities", "missing");
  ProbabilityVector probabilities(numbers_at(doc["probabilities"], "probabilities"));

  if (!doc.contains("decay")) throw ValidationError("decay", "missing");
  DecaySpec decay = parse_decay(doc["decay"], probabilities.size());

  Objective objective = Objective::ExpectedSuccesses;
  if (doc.contains("objective")) {
    if (!doc["objective"].is_string()) throw ValidationError("objective", "expected a string");
    objective = parse_objective(doc["objective"].get<std::string>());
  }
  return ScenarioConfig{std::move(probabilities), std::move(decay), objective};
}

std::string serialize_scenario(const ScenarioConfig& config) {
  json doc;
  const auto probs = config.probabilities.values();
  doc["probabilities"] = std::vector<double>(probs.begin(), probs.end());
  if (const auto* add = config.decay.as_additive()) {
    doc["decay"] = {{"type", "additive"}, {"per_stage", add->per_stage}, {"interval", add->interval}};
  } else {
    doc["decay"] = {{"type", "multiplicative"}, {"factor", config.decay.as_multiplicative()->factor}};
  }
  doc["objective"] = std::string(to_string(config.objective));
  return doc.dump(2) + "\n";
}

}  // namespace rescue::cli
