#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include <boost/math/constants/constants.hpp>

#include "momzeta/naive_oracle.hpp"
#include "momzeta/quadrature.hpp"
#include "momzeta/rng.hpp"
#include "momzeta/special.hpp"
#include "momzeta/summation.hpp"

using namespace momzeta;

TEST(Gamma, MatchesStdTgamma) {
  for (double x = 0.05; x < 170.0; x *= 1.37) EXPECT_NEAR(gamma_fn(x) / std::tgamma(x), 1.0, 1e-12) << x;
  for (double x : {-0.5, -1.5, -2.25, -7.3}) EXPECT_NEAR(gamma_fn(x) / std::tgamma(x), 1.0, 1e-12) << x;
}

TEST(Gamma, FrozenValues) {
  // 40-digit reference values.
  EXPECT_NEAR(gamma_fn(0.3), 2.9915689876875907446, 3e-15);
  EXPECT_NEAR(gamma_fn(4.5), 11.631728396567448929, 1e-13);
  EXPECT_NEAR(gamma_fn(-1.5), 2.3632718012073547031, 3e-15);
  EXPECT_NEAR(gamma_fn(0.5), std::sqrt(pi), 1e-15);
  EXPECT_DOUBLE_EQ(gamma_fn(1.0), 1.0);
  EXPECT_NEAR(gamma_fn(6.0), 120.0, 1e-12);
}

TEST(Bernoulli, ExactTable) {
  using boost::multiprecision::cpp_rational;
  EXPECT_EQ(bernoulli_b2n_exact(0), cpp_rational(1));
  EXPECT_EQ(bernoulli_b2n_exact(1), cpp_rational(1, 6));
  EXPECT_EQ(bernoulli_b2n_exact(2), cpp_rational(-1, 30));
  EXPECT_EQ(bernoulli_b2n_exact(6), cpp_rational(-691, 2730));
  EXPECT_EQ(bernoulli_b2n_exact(7), cpp_rational(7, 6));
  EXPECT_NEAR(bernoulli_b2n_over_factorial<double>(1), 1.0 / 12.0, 1e-17);
  EXPECT_NEAR(bernoulli_b2n_over_factorial<double>(2), -1.0 / 720.0, 1e-18);
}

TEST(Hurwitz, FrozenValues) {
  auto h = hurwitz_zeta<double>(2.5, 3.7, 1e-17);
  EXPECT_NEAR(h.value, 0.11475814214741722733, 1e-16);
  EXPECT_GE(h.bound, 0.0);
  EXPECT_NEAR(hurwitz_zeta<double>(1.5, 1.0, 1e-17).value, 2.6123753486854883433, 2e-15);
  EXPECT_NEAR(hurwitz_zeta<double>(7.0, 0.25, 1e-17).value / 16384.213455199571675, 1.0, 1e-15);
  EXPECT_NEAR(riemann_zeta_series<double>(2.0, 1e-17).value, pi * pi / 6.0, 1e-15);
}

TEST(Hurwitz, RejectsDivergentExponent) {
  EXPECT_THROW(hurwitz_zeta<double>(1.0, 1.0, 1e-15), divergence_error);
  EXPECT_THROW(hurwitz_zeta<double>(2.0, 0.0, 1e-15), domain_error);
}

TEST(Hurwitz, Multiprecision) {
  scoped_precision guard(256);
  const hp_float tol("1e-70");
  const auto z = riemann_zeta_series<hp_float>(hp_float(2), tol);
  const hp_float exact = boost::multiprecision::pow(boost::math::constants::pi<hp_float>(), 2) / 6;
  EXPECT_LT(static_cast<double>(abs(z.value - exact)), 1e-65);
}

TEST(CompensatedSum, RecoversCancelledTerms) {
  compensated_sum<double> s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-17);
  s.add(-1.0);
  EXPECT_NEAR(s.value(), 1e-14, 1e-20);
}

TEST(RunBlocks, OrderIndependentOfWorkers) {
  auto fn = [](std::uint64_t lo, std::uint64_t hi) { return lo * 1000 + hi; };
  const auto a = run_blocks(3, 1000, 17, 1, fn);
  const auto b = run_blocks(3, 1000, 17, 4, fn);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.front(), 3u * 1000 + 20);
  EXPECT_TRUE(run_blocks(5, 5, 4, 2, fn).empty());
}

TEST(Quadrature, SmoothAndEndpointSingular) {
  const auto r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-14, 1e-14);
  EXPECT_NEAR(r.value, std::exp(1.0) - 1.0, 1e-14);
  const auto s = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10, 1e-12);
  EXPECT_NEAR(s.value, 2.0, 1e-9);
  const auto p = integrate_pieces([](double x) { return std::abs(x - 0.3); }, {0.0, 0.3, 1.0}, 1e-14, 1e-14);
  EXPECT_NEAR(p.value, 0.5 * 0.09 + 0.5 * 0.49, 1e-14);
}

TEST(Quadrature, FailsWhenBudgetExhausted) {
  auto wild = [](double x) { return std::sin(1.0 / (x + 1e-9)); };
  EXPECT_THROW(integrate(wild, 0.0, 1.0, 1e-14, 1e-14, 20), quadrature_failure);
}

TEST(GaussLegendre, ExactForPolynomials) {
  const gauss_legendre_rule<double> rule(10);
  double w = 0.0, m19 = 0.0;
  for (unsigned i = 0; i < 10; ++i) {
    w += rule.weights[i];
    m19 += rule.weights[i] * std::pow(rule.nodes[i], 19);
    if (i > 0) {
      EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
    }
  }
  EXPECT_NEAR(w, 1.0, 1e-15);
  EXPECT_NEAR(m19, 1.0 / 20.0, 1e-15);
}

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  auto a = stream_engine(42, 7);
  auto b = stream_engine(42, 7);
  EXPECT_EQ(a(), b());
  std::set<std::uint64_t> firsts;
  for (std::uint64_t i = 0; i < 1000; ++i) firsts.insert(stream_engine(42, i)());
  EXPECT_EQ(firsts.size(), 1000u);
  auto g = stream_engine(1, 1);
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform01_open(g);
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}
