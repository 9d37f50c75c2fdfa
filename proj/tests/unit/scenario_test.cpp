#include "rescue/cli/scenario.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "rescue/error.hpp"

namespace rescue::cli {
namespace {

std::string FieldOf(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "<accepted>";
}

TEST(ParseScenario, FirstWorkedExample) {
  const ScenarioConfig config = parse_scenario(R"({
    "probabilities": [0.8, 0.9, 0.7, 0.7],
    "decay": {"type": "additive", "rate": 0.1}
  })");
  EXPECT_EQ(config.probabilities, ProbabilityVector({0.8, 0.9, 0.7, 0.7}));
  EXPECT_EQ(config.decay, DecaySpec::linear(0.1, 4));
  EXPECT_EQ(config.objective, Objective::ExpectedSuccesses);
}

TEST(ParseScenario, MultiplicativeAndObjective) {
  const ScenarioConfig config = parse_scenario(
      R"({"probabilities": [0.5], "decay": {"type": "multiplicative", "factor": 0.9},
          "objective": "all"})");
  EXPECT_EQ(config.decay, DecaySpec::multiplicative(0.9));
  EXPECT_EQ(config.objective, Objective::ProbAllSuccess);
}

TEST(ParseScenario, ExplicitPerStageDecay) {
  const ScenarioConfig config = parse_scenario(
      R"({"probabilities": [0.5, 0.6], "decay": {"type": "additive", "per_stage": [0, 0.25], "interval": 2}})");
  EXPECT_EQ(config.decay, DecaySpec::additive({0.0, 0.25}, 2.0));
}

TEST(ParseScenario, ErrorsNameTheField) {
  EXPECT_EQ(FieldOf(R"({"probabilities": [], "decay": {"type": "additive", "rate": 0.1}})"),
            "probabilities");
  EXPECT_EQ(FieldOf(R"({"probabilities": [0.4, 1.5], "decay": {"type": "additive", "rate": 0.1}})"),
            "probabilities[1]");
  EXPECT_EQ(FieldOf(R"({"probabilities": [0.4], "decay": {"type": "multiplicative", "factor": 1.0}})"),
            "decay.factor");
  EXPECT_EQ(FieldOf(R"({"probabilities": [0.4], "decay": {"type": "additive", "rate": -0.1}})"),
            "decay.rate");
  EXPECT_EQ(FieldOf(R"({"probabilities": [0.4], "decay": {"type": "linear", "rate": 0.1}})"),
            "decay.type");
  EXPECT_EQ(FieldOf(R"({"probabilities": [0.4], "decay": {"type": "additive"}})"), "decay");
  EXPECT_EQ(FieldOf(R"({"probabilities": [0.4, 0.5], "decay": {"type": "additive", "per_stage": [0]}})"),
            "decay.per_stage");
  EXPECT_EQ(FieldOf(R"({"probabilities": [0.4], "decay": {"type": "additive", "rate": 0.1}, "x": 1})"),
            "x");
  EXPECT_EQ(FieldOf(R"({"probabilities": ["a"], "decay": {"type": "additive", "rate": 0.1}})"),
            "probabilities[0]");
  EXPECT_EQ(FieldOf(R"({"probabilities": [0.4], "decay": {"type": "additive", "rate": 0.1},
                       "objective": "max"})"),
            "objective");
  EXPECT_EQ(FieldOf("{\"probabilities\": [0.4,"), "scenario");
}

TEST(ParseScenario, MalformedDocumentReportsPosition) {
  try {
    parse_scenario("{\"probabilities\": [0.4,, 0.5]}");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("byte 24"), std::string::npos) << e.what();
  }
}

TEST(SerializeScenario, RoundTripsRandomConfigs) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    ProbabilityVector p0(testing::random_probabilities(rng, 1, 13));
    DecaySpec decay = rep % 2 == 0 ? DecaySpec::linear(0.2 * unit(rng), p0.size(), 0.5 + unit(rng))
                                   : DecaySpec::multiplicative(0.01 + 0.98 * unit(rng));
    const ScenarioConfig config{std::move(p0), std::move(decay),
                                rep % 3 == 0 ? Objective::ProbAllSuccess
                                             : Objective::ExpectedSuccesses};
    EXPECT_EQ(parse_scenario(serialize_scenario(config)), config);
  }
}

}  // namespace
}  // namespace rescue::cli
