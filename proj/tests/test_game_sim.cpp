#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "momzeta/game_sim.hpp"

using namespace momzeta;

TEST(WinProb, Examples) {
  EXPECT_DOUBLE_EQ(win_prob_by(1, GameParams({0.5})), 0.5);
  EXPECT_DOUBLE_EQ(win_prob_by(2, GameParams({0.5, 0.5})), 0.5625);
  EXPECT_EQ(win_prob_by(0, GameParams({0.5})), 0.0);
  const GameParams g({0.9, 0.3, 0.7});
  double prev = 0.0;
  for (std::uint64_t k = 0; k <= 400; ++k) {
    const double l = win_prob_by(k, g);
    ASSERT_GE(l, prev);
    prev = l;
  }
  EXPECT_NEAR(prev, 1.0, 1e-15);
}

TEST(GameParams, RejectsCertainSets) {
  EXPECT_THROW(GameParams({0.5, 1.0}), domain_error);
  EXPECT_THROW(GameParams({-0.1}), domain_error);
}

TEST(PaperT, FixedCases) {
  EXPECT_NEAR(paper_T_series(GameParams({0.5}), 1e-15).value, 1.0, 1e-12);
  EXPECT_NEAR(paper_T_series(GameParams({0.5, 0.5}), 1e-15).value, 5.0 / 3.0, 1e-12);
  EXPECT_NEAR(paper_T_series(GameParams({0.5, 0.5, 0.5}), 1e-15).value, 15.0 / 7.0, 1e-12);
  EXPECT_NEAR(paper_T_inclusion_exclusion(GameParams({0.5})), 1.0, 1e-15);
  EXPECT_NEAR(paper_T_inclusion_exclusion(GameParams({0.5, 0.5})), 5.0 / 3.0, 1e-15);
  EXPECT_NEAR(paper_T_inclusion_exclusion(GameParams({0.5, 0.5, 0.5})), 15.0 / 7.0, 1e-15);
  EXPECT_EQ(paper_T_series(GameParams(std::vector<double>{}), 1e-12).value, 0.0);
  EXPECT_EQ(paper_T_inclusion_exclusion(GameParams(std::vector<double>{})), 0.0);
}

TEST(PaperT, TooManySets) {
  EXPECT_THROW(paper_T_inclusion_exclusion(GameParams(std::vector<double>(21, 0.1))), too_many_sets);
  EXPECT_NO_THROW(paper_T_series(GameParams(std::vector<double>(21, 0.1)), 1e-12));
}

TEST(PaperT, SeriesMatchesInclusionExclusion) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> prob(0.0, 0.95);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> p(static_cast<std::size_t>(size(rng)));
    for (auto& v : p) v = prob(rng);
    const GameParams g(p);
    const auto s = paper_T_series(g, 1e-13);
    ASSERT_NEAR(s.value, paper_T_inclusion_exclusion(g), 1e-9) << i;
    ASSERT_LE(s.tail_bound, 1e-13);
  }
}

TEST(ExpectedRounds, Examples) {
  EXPECT_NEAR(expected_rounds(GameParams({0.5}), 1e-15), 2.0, 1e-12);
  EXPECT_NEAR(expected_rounds(GameParams({0.5, 0.5}), 1e-15), 8.0 / 3.0, 1e-12);
  EXPECT_EQ(expected_rounds(GameParams(std::vector<double>{}), 1e-15), 1.0);
}

TEST(Simulate, ZeroProbabilitiesEndImmediately) {
  auto rng = stream_engine(1, 0);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(simulate_game(GameParams({0.0, 0.0, 0.0}), rng), 1u);
}

TEST(Simulate, MeansWithinFourStderr) {
  for (const auto& p : std::vector<std::vector<double>>{{0.5}, {0.5, 0.5}, {0.9, 0.2, 0.6}, {0.3, 0.3, 0.3, 0.8}}) {
    const auto r = run_trials(GameParams(p), 100000, 42);
    ASSERT_TRUE(r.target);
    EXPECT_LE(std::abs(r.mean - *r.target), 4.0 * r.stderr_) << p.size();
    EXPECT_NEAR(r.stderr_, std::sqrt(r.variance / 100000.0), 1e-15);
    EXPECT_EQ(r.mode, "fixed-p");
  }
}

TEST(Simulate, DurationLawKolmogorovSmirnov) {
  for (const auto& p : std::vector<std::vector<double>>{{0.5, 0.3}, {0.5}, {0.5, 0.5}}) {
    const GameParams g(p);
    EXPECT_LT(duration_ks_distance(g, sample_durations(g, 100000, 42)), 0.01);
  }
}

TEST(Simulate, DeterministicAcrossWorkers) {
  const GameParams g({0.4, 0.7});
  const auto a = run_trials(g, 20000, 5, 1);
  const auto b = run_trials(g, 20000, 5, 3);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.variance, b.variance);
  EXPECT_EQ(sample_durations(g, 9000, 5, 1), sample_durations(g, 9000, 5, 4));
  const auto c = run_trials(g, 20000, 6, 1);
  EXPECT_NE(a.mean, c.mean);
}

TEST(RandomP, BetaEdgeMatchesExactTarget) {
  const auto d = EdgeDistribution::beta_edge(1.0);
  const auto r = run_trials(d, 100, 10000, 42, 2);
  ASSERT_TRUE(r.target);
  EXPECT_EQ(r.target_kind, "expected_rounds");
  EXPECT_LE(std::abs(r.mean - *r.target), 4.0 * r.stderr_);
  const double lead = predict(PredictionKind::mainisdef, {2.0, 1.0, 2.0}, 100).value + 1.0;
  EXPECT_NEAR(r.mean / 10.0, lead / 10.0, 0.1 * lead / 10.0);
}

TEST(RandomP, UniformIsFlaggedHeavyTailed) {
  const auto r = run_trials(EdgeDistribution::uniform(), 10, 1000, 42);
  EXPECT_FALSE(r.target);
  EXPECT_EQ(r.target_kind, "undefined");
  EXPECT_NE(r.warning.find("heavy tail"), std::string::npos);
}

TEST(ZetaExpectation, UniformMatchesRiemannZeta) {
  const auto r = zeta_expectation_mc(EdgeDistribution::uniform(), 3, 200000, 42);
  ASSERT_TRUE(r.target);
  EXPECT_NEAR(*r.target, 1.2020569031595942854, 1e-9);
  EXPECT_LE(std::abs(r.mean - *r.target), 4.0 * r.stderr_);
  const auto r4 = zeta_expectation_mc(EdgeDistribution::uniform(), 4, 200000, 43);
  EXPECT_NEAR(*r4.target, 1.0823232337111381915, 1e-9);
  EXPECT_LE(std::abs(r4.mean - *r4.target), 4.0 * r4.stderr_);
}

TEST(ZetaExpectation, DivergenceWarning) {
  const auto r = zeta_expectation_mc(EdgeDistribution::uniform(), 1, 1000, 42);
  EXPECT_FALSE(r.target);
  EXPECT_NE(r.warning.find("divergent"), std::string::npos);
  const auto r2 = zeta_expectation_mc(EdgeDistribution::uniform(), 2, 1000, 42);
  EXPECT_TRUE(r2.target);
  EXPECT_NE(r2.warning.find("infinite variance"), std::string::npos);
}
