#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "momzeta/dist_core.hpp"
#include "momzeta/rng.hpp"

using namespace momzeta;

namespace {

double ks_distance(const EdgeDistribution& d, std::size_t count, std::uint64_t seed) {
  auto rng = stream_engine(seed, 0);
  std::vector<double> xs(count);
  for (auto& x : xs) x = sample(d, rng);
  std::sort(xs.begin(), xs.end());
  double worst = 0.0;
  const double n = static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double F = d.cdf(xs[i]);
    worst = std::max({worst, std::abs(F - static_cast<double>(i) / n), std::abs(static_cast<double>(i + 1) / n - F)});
  }
  return worst;
}

EdgeDistribution perturbed() {
  return EdgeDistribution::tabulated(TabulatedDensity({0.0, 1.0}, {0.75, 1.25}, EdgeParams{1.25, 0.0, 1.0}));
}

}  // namespace

TEST(Moment, SpecExamples) {
  EXPECT_DOUBLE_EQ(moment(EdgeDistribution::uniform(), 5), 1.0 / 6.0);
  EXPECT_NEAR(moment(EdgeDistribution::beta_edge(1.0, 2.0), 2), 1.0 / 6.0, 1e-16);
  const double k = 1e4;
  const double m = moment(EdgeDistribution::beta_edge(1.0, 2.0), 10000);
  EXPECT_NEAR(k * k * m / 2.0, 1.0, 0.01);
}

TEST(Moment, NonIntegerBetaFrozen) {
  const auto d = EdgeDistribution::beta_edge(0.5);
  EXPECT_NEAR(moment(d, 1), 0.4, 1e-15);
  EXPECT_NEAR(moment(d, 3), 0.15238095238095238095, 1e-15);
  EXPECT_NEAR(moment(d, 100), 0.0013048090539541725895, 1e-16);
}

TEST(Moment, ClosedFormMatchesQuadrature) {
  for (const auto& d : {EdgeDistribution::uniform(), EdgeDistribution::beta_edge(1.0), EdgeDistribution::beta_edge(2.0),
                        EdgeDistribution::beta_edge(0.5), EdgeDistribution::beta_edge(3.7)}) {
    for (std::uint64_t k = 1; k <= 100; ++k) ASSERT_NEAR(moment(d, k), moment_quadrature(d, k), 1e-10) << d.label() << k;
  }
}

TEST(Moment, TabulatedMatchesExactPolynomial) {
  const auto d = perturbed();
  for (std::uint64_t k : {1u, 10u, 100u, 10000u}) {
    const double kd = static_cast<double>(k);
    EXPECT_NEAR(moment(d, k), 0.75 / (kd + 1.0) + 0.5 / (kd + 2.0), 1e-12) << k;
  }
}

TEST(Moment, MonotoneDecreasing) {
  for (const auto& d : {EdgeDistribution::uniform(), EdgeDistribution::beta_edge(1.0), EdgeDistribution::beta_edge(2.0)}) {
    double prev = moment(d, 1);
    for (std::uint64_t j = 2; j <= 1001; ++j) {
      const double m = moment(d, j);
      ASSERT_LT(m, prev) << d.label() << " j=" << j;
      prev = m;
    }
  }
}

TEST(Moment, TailLawAt1e4) {
  for (const auto& d : {EdgeDistribution::uniform(), EdgeDistribution::beta_edge(1.0), EdgeDistribution::beta_edge(2.0),
                        EdgeDistribution::beta_edge(0.5)}) {
    const auto t = tail_model(d);
    const double scaled = std::pow(1e4, t.alpha) * moment(d, 10000);
    EXPECT_LE(std::abs(scaled - t.L), 0.01 * t.L) << d.label();
  }
}

TEST(Moment, RejectsZeroOrder) { EXPECT_THROW(moment(EdgeDistribution::uniform(), 0), domain_error); }

TEST(TailModel, Examples) {
  const auto u = tail_model(EdgeDistribution::uniform());
  EXPECT_EQ(u.L, 1.0);
  EXPECT_EQ(u.alpha, 1.0);
  EXPECT_EQ(u.delta, 1.0);
  const auto b1 = tail_model(EdgeDistribution::beta_edge(1.0, 2.0));
  EXPECT_NEAR(b1.L, 2.0, 1e-14);
  EXPECT_EQ(b1.alpha, 2.0);
  const auto b2 = tail_model(EdgeDistribution::beta_edge(2.0, 3.0));
  EXPECT_NEAR(b2.L, 6.0, 1e-13);
  EXPECT_EQ(b2.alpha, 3.0);
  EXPECT_EQ(tail_model(EdgeDistribution::beta_edge(1.0, 2.0, 0.5)).delta, 0.5);
}

TEST(TailModel, TabulatedNeedsEdgeData) {
  const auto d = EdgeDistribution::tabulated(TabulatedDensity({0.0, 1.0}, {1.0, 1.0}));
  EXPECT_THROW(tail_model(d), missing_edge_data);
  EXPECT_NEAR(tail_model(perturbed()).L, 1.25, 1e-15);
}

TEST(Sample, InverseCdfExamples) {
  EXPECT_DOUBLE_EQ(EdgeDistribution::uniform().inverse_cdf(0.25), 0.25);
  EXPECT_NEAR(EdgeDistribution::beta_edge(1.0).inverse_cdf(0.75), 0.5, 1e-15);
  const auto d = perturbed();
  for (double u : {0.01, 0.3, 0.5, 0.99}) EXPECT_NEAR(d.cdf(d.inverse_cdf(u)), u, 1e-11);
}

TEST(Sample, KolmogorovSmirnov) {
  for (const auto& d : {EdgeDistribution::uniform(), EdgeDistribution::beta_edge(1.0), EdgeDistribution::beta_edge(0.5),
                        perturbed()})
    EXPECT_LT(ks_distance(d, 100000, 42), 0.01) << d.label();
}

TEST(Sample, DeterministicForSeed) {
  auto a = stream_engine(9, 3), b = stream_engine(9, 3);
  const auto d = EdgeDistribution::beta_edge(2.0);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(sample(d, a), sample(d, b));
}

TEST(Distribution, Normalization) {
  EXPECT_THROW(EdgeDistribution::beta_edge(1.0, 3.0), invalid_distribution);
  EXPECT_THROW(EdgeDistribution::beta_edge(-0.5), invalid_distribution);
  EXPECT_THROW(TabulatedDensity({0.0, 1.0}, {1.0, 2.0}), invalid_distribution);
  const TabulatedDensity t({0.0, 1.0}, {1.0, 2.0}, std::nullopt, true);
  EXPECT_NEAR(t.cdf(1.0), 1.0, 1e-15);
  EXPECT_NEAR(t.density(1.0), 4.0 / 3.0, 1e-15);
  for (const auto& d : {EdgeDistribution::uniform(), EdgeDistribution::beta_edge(2.0), perturbed()})
    EXPECT_NEAR(d.cdf(1.0) - d.cdf(0.0), 1.0, 1e-10);
}

TEST(Distribution, GridValidation) {
  EXPECT_THROW(TabulatedDensity({0.0, 0.5}, {1.0, 1.0}), invalid_distribution);
  EXPECT_THROW(TabulatedDensity({0.0, 0.5, 0.5, 1.0}, {1.0, 1.0, 1.0, 1.0}), invalid_distribution);
  EXPECT_THROW(TabulatedDensity({0.0, 0.5, 1.0}, {2.0, -0.5, 2.0}), invalid_distribution);
  EXPECT_THROW(TabulatedDensity({0.0, 1.0}, {1.0}), invalid_distribution);
}

TEST(Csv, ParsesAndRejects) {
  std::istringstream good("x,f\n0,0.75\n0.5,1.0\n1,1.25\n");
  const auto t = parse_tabulated_csv(good, EdgeParams{1.25, 0.0, 1.0});
  EXPECT_EQ(t.x().size(), 3u);
  EXPECT_NEAR(t.density(0.25), 0.875, 1e-15);
  std::istringstream bad_header("a,b\n0,1\n1,1\n");
  EXPECT_THROW(parse_tabulated_csv(bad_header), invalid_distribution);
  std::istringstream bad_number("x,f\n0,1\n1,abc\n");
  EXPECT_THROW(parse_tabulated_csv(bad_number), invalid_distribution);
  std::istringstream empty("");
  EXPECT_THROW(parse_tabulated_csv(empty), invalid_distribution);
  EXPECT_THROW(load_tabulated_csv("/nonexistent/density.csv"), invalid_distribution);
}

TEST(MomentSequence, Examples) {
  EXPECT_DOUBLE_EQ(moment_sequence(EdgeDistribution::uniform())(3), 0.25);
  EXPECT_DOUBLE_EQ(moment_sequence_power(2.0)(3), 1.0 / 9.0);
  EXPECT_NEAR(moment_sequence(EdgeDistribution::beta_edge(1.0))(1), 1.0 / 3.0, 1e-16);
  const auto p = moment_sequence_power(2.0);
  EXPECT_EQ(p.provenance(), Provenance::abstract);
  EXPECT_EQ(p.tail()->L, 1.0);
  EXPECT_EQ(p.tail()->alpha, 2.0);
  EXPECT_THROW(moment_sequence_power(0.0), domain_error);
  EXPECT_THROW(p(0), domain_error);
}

TEST(MomentSequence, TabulatedEdgeDataChecked) {
  const TabulatedDensity wrong({0.0, 1.0}, {0.75, 1.25}, EdgeParams{5.0, 0.0, 1.0});
  EXPECT_THROW(moment_sequence(EdgeDistribution::tabulated(wrong)), invalid_tail);
  const auto ok = moment_sequence(perturbed());
  EXPECT_EQ(ok.provenance(), Provenance::from_distribution);
  EXPECT_FALSE(ok.exact_power());
}
