#pragma once

// The covering game under the independence hypothesis: sets of measure
// p_1..p_n, draw points until every set has been missed at least once.
// The round at which set i is first missed is geometric, so the duration
// is T = max_i G_i.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "momzeta/binom_sums.hpp"
#include "momzeta/dist_core.hpp"
#include "momzeta/errors.hpp"
#include "momzeta/moment_zeta.hpp"
#include "momzeta/rng.hpp"
#include "momzeta/summation.hpp"

namespace momzeta {

class GameParams {
 public:
  GameParams() = default;
  explicit GameParams(std::vector<double> p) : p_(std::move(p)) {
    for (double v : p_)
      if (!(v >= 0.0 && v < 1.0)) throw domain_error("every p_i must lie in [0, 1), got " + std::to_string(v));
  }
  std::span<const double> p() const { return p_; }
  std::size_t size() const { return p_.size(); }

 private:
  std::vector<double> p_;
};

/// l_k = prod_i (1 - p_i^k), the probability the game is over after k draws.
inline double win_prob_by(std::uint64_t k, const GameParams& g) {
  double l = 1.0;
  for (double p : g.p()) l *= (k == 0 ? 0.0 : 1.0 - std::pow(p, static_cast<double>(k)));
  return l;
}

namespace detail {

// 1 - l_k without cancellation when l_k is close to 1.
inline double one_minus_l(std::uint64_t k, const GameParams& g) {
  double log_l = 0.0;
  for (double p : g.p()) {
    const double pk = std::pow(p, static_cast<double>(k));
    if (pk >= 1.0) return 1.0;
    log_l += std::log1p(-pk);
  }
  return -std::expm1(log_l);
}

}  // namespace detail

/// sum_{k>=1} (1 - l_k), with geometric tail bound sum_i p_i^{K+1} / (1 - p_i).
/// This is one less than the mean duration; see expected_rounds.
inline SumResult paper_T_series(const GameParams& g, double tol) {
  if (!(tol > 0.0)) throw domain_error("tol must be positive");
  compensated_sum<double> acc;
  std::uint64_t k = 0;
  double bound = 0.0;
  for (;;) {
    bound = 0.0;
    for (double p : g.p()) bound += std::pow(p, static_cast<double>(k + 1)) / (1.0 - p);
    if (bound <= tol) break;
    ++k;
    acc.add(detail::one_minus_l(k, g));
  }
  return {acc.value(), bound, k, "series"};
}

/// Inclusion-exclusion over nonempty subsets s: sum (-1)^{|s|-1} p_s / (1 - p_s).
inline double paper_T_inclusion_exclusion(const GameParams& g) {
  const std::size_t n = g.size();
  if (n > 20) throw too_many_sets("inclusion-exclusion limited to n <= 20, got " + std::to_string(n));
  const auto p = g.p();
  compensated_sum<double> acc;
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<double> prod(count, 1.0);
  for (std::uint32_t s = 1; s < count; ++s) {
    const int low = std::countr_zero(s);
    prod[s] = prod[s & (s - 1)] * p[static_cast<std::size_t>(low)];
    const double ps = prod[s];
    const double term = ps / (1.0 - ps);  // 1/(1-p_s) - 1
    acc.add(std::popcount(s) % 2 == 1 ? term : -term);
  }
  return acc.value();
}

/// Mean number of draws until the game ends: paper_T_series + 1.
inline double expected_rounds(const GameParams& g, double tol) { return paper_T_series(g, tol).value + 1.0; }

/// One game: T = max_i G_i with G_i = ceil(ln U / ln p_i), and G_i = 1 when p_i = 0.
template <class URBG>
std::uint64_t simulate_game(std::span<const double> p, URBG& rng) {
  std::uint64_t t = 1;
  for (double pi : p) {
    if (pi <= 0.0) continue;
    const double u = uniform01_open(rng);
    const double g = std::ceil(std::log(u) / std::log(pi));
    const auto gi = g < 1.0 ? std::uint64_t{1} : static_cast<std::uint64_t>(g);
    t = std::max(t, gi);
  }
  return t;
}

template <class URBG>
std::uint64_t simulate_game(const GameParams& g, URBG& rng) {
  return simulate_game(g.p(), rng);
}

struct SimulationReport {
  std::string mode;  // "fixed-p", "random-p" or "zeta-mc"
  std::string dist;  // distribution label in random modes
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double variance = 0.0;
  double stderr_ = 0.0;
  double max_value = 0.0;
  std::optional<double> target;
  std::string target_kind;
  std::string warning;
};

namespace detail {

struct moments_acc {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  double max = 0.0;

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
    max = std::max(max, x);
  }
  // Chan et al. pairwise combination.
  void merge(const moments_acc& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(count), nb = static_cast<double>(o.count);
    const double d = o.mean - mean;
    const double nt = na + nb;
    mean += d * nb / nt;
    m2 += o.m2 + d * d * na * nb / nt;
    count += o.count;
    max = std::max(max, o.max);
  }
};

inline constexpr std::uint64_t trial_block = 4096;

// Runs `one(rng)` for trials [0, trials), each with its own stream.
template <class Fn>
moments_acc run_streams(std::uint64_t trials, std::uint64_t seed, unsigned workers, Fn one) {
  auto parts = run_blocks(0, trials, trial_block, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    moments_acc a;
    for (std::uint64_t t = lo; t < hi; ++t) {
      auto rng = stream_engine(seed, t);
      a.add(one(rng));
    }
    return a;
  });
  moments_acc total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

inline void fill_stats(SimulationReport& r, const moments_acc& a) {
  r.mean = a.mean;
  r.variance = a.count > 1 ? a.m2 / static_cast<double>(a.count - 1) : 0.0;
  r.stderr_ = std::sqrt(r.variance / static_cast<double>(a.count));
  r.max_value = a.max;
}

// Draw from dist, redrawing exact 1.0 (the game would never end).
template <class URBG>
double draw_below_one(const EdgeDistribution& dist, URBG& rng) {
  for (;;) {
    const double x = sample(dist, rng);
    if (x < 1.0) return x;
  }
}

}  // namespace detail

/// Fixed probabilities: `trials` independent games.
inline SimulationReport run_trials(const GameParams& g, std::uint64_t trials, std::uint64_t seed, unsigned workers = 1) {
  if (trials < 1) throw domain_error("trials must be >= 1");
  SimulationReport r;
  r.mode = "fixed-p";
  r.n = g.size();
  r.trials = trials;
  r.seed = seed;
  const auto acc = detail::run_streams(trials, seed, workers,
                                       [&](engine_type& rng) { return static_cast<double>(simulate_game(g, rng)); });
  detail::fill_stats(r, acc);
  r.target = expected_rounds(g, 1e-13);
  r.target_kind = "expected_rounds";
  return r;
}

/// Random probabilities: each trial draws fresh p_1..p_n from dist, then
/// plays one game. When alpha > 1 the mean duration is
/// 1 - sum_{k=1}^n (-1)^k C(n,k) zeta_F(k), reported as the target.
inline SimulationReport run_trials(const EdgeDistribution& dist, std::uint64_t n, std::uint64_t trials,
                                   std::uint64_t seed, unsigned workers = 1) {
  if (trials < 1) throw domain_error("trials must be >= 1");
  SimulationReport r;
  r.mode = "random-p";
  r.dist = dist.label();
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  const auto acc = detail::run_streams(trials, seed, workers, [&](engine_type& rng) {
    std::vector<double> p(n);
    for (auto& v : p) v = detail::draw_below_one(dist, rng);
    return static_cast<double>(simulate_game(std::span<const double>(p), rng));
  });
  detail::fill_stats(r, acc);
  std::optional<TailModel> tail;
  try {
    tail = tail_model(dist);
  } catch (const missing_edge_data&) {
  }
  if (!tail) {
    r.target_kind = "unknown";
    r.warning = "no tail model; expectation not certified";
  } else if (tail->alpha > 1.0 && n >= 1) {
    const auto ms = moment_sequence(dist);
    const auto s = alt_sum_stable(ms, n, 1, 1e-6, {workers});
    r.target = 1.0 - s.value;
    r.target_kind = "expected_rounds";
  } else {
    r.target_kind = "undefined";
    r.warning = "heavy tail: edge exponent alpha <= 1, so sum 1/(1-p_i) has no expectation; sample mean and variance do not converge";
  }
  return r;
}

/// Monte Carlo mean of 1/(1 - x_1 ... x_n) for x_i i.i.d. from dist.
/// Expanding the geometric series gives sum_{k>=0} m_k^n = 1 + zeta_F(n).
inline SimulationReport zeta_expectation_mc(const EdgeDistribution& dist, std::uint64_t n, std::uint64_t trials,
                                            std::uint64_t seed, unsigned workers = 1) {
  if (n < 1) throw domain_error("n must be >= 1");
  if (trials < 1) throw domain_error("trials must be >= 1");
  SimulationReport r;
  r.mode = "zeta-mc";
  r.dist = dist.label();
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  const auto acc = detail::run_streams(trials, seed, workers, [&](engine_type& rng) {
    double prod = 1.0;
    for (std::uint64_t i = 0; i < n; ++i) prod *= detail::draw_below_one(dist, rng);
    return 1.0 / (1.0 - prod);
  });
  detail::fill_stats(r, acc);
  std::optional<TailModel> tail;
  try {
    tail = tail_model(dist);
  } catch (const missing_edge_data&) {
  }
  if (!tail) {
    r.target_kind = "unknown";
    r.warning = "no tail model; zeta_F(n) not certified";
    return r;
  }
  const double nd = static_cast<double>(n);
  if (!(nd * tail->alpha > 1.0)) {
    r.target_kind = "undefined";
    r.warning = "divergent: zeta_F(" + std::to_string(n) + ") is undefined, so the expectation does not exist";
    return r;
  }
  const auto z = moment_zeta(moment_sequence(dist), nd, 1e-10);
  r.target = 1.0 + z.value;
  r.target_kind = "1+zeta_F(n)";
  if (!(nd * tail->alpha > 2.0)) r.warning = "infinite variance: stderr is not meaningful";
  return r;
}

/// Raw durations of `trials` fixed-p games, in trial order.
inline std::vector<std::uint64_t> sample_durations(const GameParams& g, std::uint64_t trials, std::uint64_t seed,
                                                   unsigned workers = 1) {
  auto parts = run_blocks(0, trials, detail::trial_block, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    out.reserve(hi - lo);
    for (std::uint64_t t = lo; t < hi; ++t) {
      auto rng = stream_engine(seed, t);
      out.push_back(simulate_game(g, rng));
    }
    return out;
  });
  std::vector<std::uint64_t> all;
  all.reserve(trials);
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

/// Kolmogorov-Smirnov distance between the empirical law of T and
/// l_k = prod (1 - p_i^k), over integer k.
inline double duration_ks_distance(const GameParams& g, std::vector<std::uint64_t> samples) {
  std::sort(samples.begin(), samples.end());
  const double total = static_cast<double>(samples.size());
  double worst = 0.0;
  std::size_t i = 0;
  const std::uint64_t kmax = samples.empty() ? 0 : samples.back();
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    while (i < samples.size() && samples[i] <= k) ++i;
    worst = std::max(worst, std::abs(static_cast<double>(i) / total - win_prob_by(k, g)));
  }
  return worst;
}

}  // namespace momzeta
