#include "rescue/decay.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "rescue/distribution.hpp"
#include "rescue/error.hpp"

namespace rescue {
namespace {

constexpr double kTol = 1e-12;

void ExpectValuesNear(const ProbabilityVector& pv, const std::vector<double>& expected) {
  ASSERT_EQ(pv.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(pv[i], expected[i], kTol) << i;
}

TEST(LinearDecaySequence, Examples) {
  const std::vector<double> tenth = linear_decay_sequence(0.1, 4);
  ASSERT_EQ(tenth.size(), 4u);
  EXPECT_NEAR(tenth[3], 0.3, kTol);
  EXPECT_EQ(tenth[0], 0.0);
  EXPECT_EQ(linear_decay_sequence(0.0, 5), std::vector<double>(5, 0.0));
  const std::vector<double> cave = linear_decay_sequence(0.06, 13);
  ASSERT_EQ(cave.size(), 13u);
  EXPECT_NEAR(cave[1], 0.06, kTol);
  EXPECT_NEAR(cave[12], 0.72, kTol);
}

TEST(LinearDecaySequence, RejectsNegativeRate) {
  EXPECT_THROW(linear_decay_sequence(-0.01, 3), ValidationError);
  EXPECT_THROW(linear_decay_sequence(0.1, 0), ValidationError);
}

TEST(ApplyAdditive, PaperExamples) {
  const std::vector<double> d = linear_decay_sequence(0.1, 4);
  ExpectValuesNear(apply_additive(ProbabilityVector({0.8, 0.9, 0.7, 0.7}), d), {0.8, 0.8, 0.5, 0.4});
  ExpectValuesNear(apply_additive(ProbabilityVector({0.8, 0.9, 0.1, 0.2}), d), {0.8, 0.8, 0, 0});
}

TEST(ApplyAdditive, ZeroDecayIsIdentity) {
  const ProbabilityVector p0({0.3, 0.0, 1.0, 0.55});
  EXPECT_EQ(apply_additive(p0, std::vector<double>(4, 0.0)), p0);
}

TEST(ApplyAdditive, LengthMismatch) {
  EXPECT_THROW(apply_additive(ProbabilityVector({0.5, 0.5}), std::vector<double>{0.0}),
               ValidationError);
}

TEST(ApplyAdditive, ClampsAndNeverIncreases) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> rate(0.0, 0.3);
  for (int rep = 0; rep < 200; ++rep) {
    const ProbabilityVector p0(testing::random_probabilities(rng, 1, 12));
    const std::vector<double> d = linear_decay_sequence(rate(rng), p0.size());
    const ProbabilityVector p1 = apply_additive(p0, d);
    for (std::size_t i = 0; i < p0.size(); ++i) {
      EXPECT_LE(p1[i], p0[i]);
      EXPECT_GE(p1[i], 0.0);
      EXPECT_EQ(p1[i] == 0.0, p0[i] <= d[i]);
    }
  }
}

TEST(ApplyMultiplicative, Examples) {
  ExpectValuesNear(apply_multiplicative(ProbabilityVector({0.9, 0.8}), 0.9), {0.9, 0.72});
  ExpectValuesNear(apply_multiplicative(ProbabilityVector({0.37}), 0.2), {0.37});
  const ProbabilityVector ones = apply_multiplicative(ProbabilityVector({1, 1, 1}), 0.5);
  ExpectValuesNear(ones, {1, 0.5, 0.25});
  EXPECT_NEAR(prob_all_success(ones), 0.125, kTol);
}

TEST(ApplyMultiplicative, RejectsFactorOutsideOpenInterval) {
  const ProbabilityVector p0({0.5});
  EXPECT_THROW(apply_multiplicative(p0, 0.0), ValidationError);
  EXPECT_THROW(apply_multiplicative(p0, 1.0), ValidationError);
  EXPECT_THROW(apply_multiplicative(p0, -0.3), ValidationError);
  EXPECT_THROW(DecaySpec::multiplicative(1.0), ValidationError);
}

TEST(ApplyMultiplicative, AllSuccessIndependentOfOrder) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> factor(0.05, 0.99);
  for (int rep = 0; rep < 20; ++rep) {
    const ProbabilityVector p0(testing::random_probabilities(rng, 1, 6));
    const double p = factor(rng);
    const testing::Range r = testing::objective_range(p0.size(), [&](const auto& order) {
      return prob_all_success(apply_multiplicative(arrange(p0, Permutation(order)), p));
    });
    EXPECT_NEAR(r.max, r.min, kTol);
  }
}

TEST(ApplyAdditive, ExpectationIndependentOfOrderWithoutClamping) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> high(0.6, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> probs(6);
    for (double& p : probs) p = high(rng);
    const ProbabilityVector p0(probs);
    // 5 stages of at most 0.1 keeps every entry above zero.
    const std::vector<double> d = linear_decay_sequence(0.1, 6);
    const testing::Range r = testing::objective_range(6, [&](const auto& order) {
      return expected_successes(apply_additive(arrange(p0, Permutation(order)), d));
    });
    EXPECT_NEAR(r.max, r.min, kTol);
  }
}

TEST(DecaySpec, AdditiveValidation) {
  EXPECT_THROW(DecaySpec::additive({0.0, 0.2, 0.1}), ValidationError);
  EXPECT_THROW(DecaySpec::additive({-0.1, 0.0}), ValidationError);
  EXPECT_THROW(DecaySpec::additive({0.0, 0.1}, 0.0), ValidationError);
  EXPECT_THROW(DecaySpec::additive({}), ValidationError);
  EXPECT_NO_THROW(DecaySpec::additive({0.0, 0.1, 0.1}));
  EXPECT_EQ(DecaySpec::linear(0.1, 3).kind(), DecayKind::Additive);
  EXPECT_EQ(DecaySpec::multiplicative(0.5).kind(), DecayKind::Multiplicative);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), ValidationError);
  EXPECT_THROW(Permutation({0, 3, 1}), ValidationError);
  EXPECT_THROW(Permutation(std::vector<std::size_t>{}), ValidationError);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Schedule, StartTimesStepByInterval) {
  const Schedule s = make_schedule(Permutation::identity(4), 2.5);
  EXPECT_EQ(s.start_times, (std::vector<double>{0.0, 2.5, 5.0, 7.5}));
  EXPECT_THROW(make_schedule(Permutation::identity(2), 0.0), ValidationError);
}

}  // namespace
}  // namespace rescue
