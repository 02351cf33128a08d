#pragma once

// Alternating binomial-zeta sums
//
//   A(n) = sum_{k=kmin}^{n} (-1)^k C(n,k) zeta_F(k),   kmin in {1, 2},
//
// evaluated in moment space as sum_j [(1 - m_j)^n - 1 (+ n m_j)], where
// every j-term carries the same sign, plus the asymptotic predictors and
// the Gamma-integral identities they rest on.

#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "momzeta/dist_core.hpp"
#include "momzeta/errors.hpp"
#include "momzeta/moment_zeta.hpp"
#include "momzeta/quadrature.hpp"
#include "momzeta/special.hpp"
#include "momzeta/summation.hpp"

namespace momzeta {

/// sum_{k=kmin}^{n} (-1)^k C(n,k) m^k, i.e. (1-m)^n - 1 for kmin = 1 and
/// (1-m)^n - 1 + n m for kmin = 2. Non-positive for kmin = 1, non-negative
/// for kmin = 2, for every m in [0, 1].
inline double binomial_residual(double m, std::uint64_t n, int kmin) {
  const double nd = static_cast<double>(n);
  if (m <= 0.0) return 0.0;
  if (nd * m <= 0.125) {
    // Terms shrink at least 8x per step; sum the short power series.
    double term = kmin == 1 ? -nd * m : 0.5 * nd * (nd - 1.0) * m * m;
    double sum = 0.0;
    for (std::uint64_t k = static_cast<std::uint64_t>(kmin); k <= n && term != 0.0; ++k) {
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
      term *= -(nd - static_cast<double>(k)) / static_cast<double>(k + 1) * m;
    }
    return sum;
  }
  if (m >= 1.0) return kmin == 1 ? -1.0 : nd - 1.0;
  const double e = std::expm1(nd * std::log1p(-m));
  return kmin == 1 ? e : e + nd * m;
}

struct StableOptions {
  unsigned workers = 1;
  std::uint64_t min_terms = 0;
  std::uint64_t max_terms = std::uint64_t{1} << 26;
};

namespace detail {

inline void check_alt_sum_domain(const MomentSequence& ms, std::uint64_t n, int kmin) {
  if (kmin != 1 && kmin != 2) throw domain_error("kmin must be 1 or 2");
  if (n < static_cast<std::uint64_t>(kmin)) throw domain_error("n must be >= kmin");
  if (!ms.tail()) throw tail_unavailable("sequence " + ms.label() + " has no tail model");
  const double alpha = ms.tail()->alpha;
  if (kmin == 1 && !(alpha > 1.0))
    throw divergence_error("kmin = 1 needs alpha > 1 (zeta_F(1) diverges), alpha = " + std::to_string(alpha));
  if (kmin == 2 && !(alpha > 0.5))
    throw divergence_error("kmin = 2 needs alpha > 1/2, alpha = " + std::to_string(alpha));
}

inline compensated_sum<double> sum_residuals(const MomentSequence& ms, std::uint64_t first, std::uint64_t last,
                                             std::uint64_t n, int kmin, unsigned workers) {
  constexpr std::uint64_t block = 1 << 14;
  auto parts = run_blocks(first, last, block, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    compensated_sum<double> s;
    for (std::uint64_t j = lo; j < hi; ++j) s.add(binomial_residual(ms(j), n, kmin));
    return s;
  });
  compensated_sum<double> total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace detail

/// Stable evaluation of sum_{k=kmin}^n (-1)^k C(n,k) zeta_F(k).
///
/// Sequences known to be an exact power law get their tail from a
/// Bonferroni-truncated expansion in Hurwitz zeta values; the truncation
/// error is bounded by the first omitted binomial term. Other sequences
/// use the one-term Bonferroni envelope C(n,kmin) (C j^-alpha)^kmin and
/// double J until that bound drops below `tol`.
inline SumResult alt_sum_stable(const MomentSequence& ms, std::uint64_t n, int kmin, double tol,
                                StableOptions opt = {}) {
  detail::check_alt_sum_domain(ms, n, kmin);
  if (!(tol > 0.0)) throw domain_error("tol must be positive");
  const double nd = static_cast<double>(n);
  const auto& tail = *ms.tail();

  if (const auto& pw = ms.exact_power()) {
    // Smallest J with n m_J <= 1/16 so the tail expansion converges fast.
    const double reach = std::pow(16.0 * nd * pw->scale, 1.0 / pw->exponent) - pw->shift;
    std::uint64_t J = std::max<std::uint64_t>(64, static_cast<std::uint64_t>(std::ceil(std::max(reach, 0.0))));
    J = std::max(J, opt.min_terms);
    auto acc = detail::sum_residuals(ms, 1, J + 1, n, kmin, opt.workers);
    const double a = static_cast<double>(J) + 1.0 + pw->shift;

    compensated_sum<double> tail_sum;
    double bound = 0.0;
    double coef = 1.0;  // C(n, k)
    for (int k = 1; k < kmin; ++k) coef *= (nd - (k - 1)) / k;
    bool closed = false;
    for (std::uint64_t k = static_cast<std::uint64_t>(kmin); k <= n; ++k) {
      coef *= (nd - static_cast<double>(k - 1)) / static_cast<double>(k);
      const double sk = std::pow(pw->scale, static_cast<double>(k));
      const auto h = hurwitz_zeta<double>(pw->exponent * static_cast<double>(k), a, 1e-17);
      const double mag = coef * sk * h.value;
      if (mag <= 0.25 * tol && mag <= 1e-17 * std::abs(acc.value() + tail_sum.value())) {
        // Bonferroni: the partial expansion is off by at most this term.
        bound += mag;
        closed = true;
        break;
      }
      tail_sum.add((k % 2 == 0 ? 1.0 : -1.0) * mag);
      bound += coef * sk * h.bound;
      if (k == n) closed = true;
    }
    if (!closed) throw precision_exhausted("tail expansion did not converge");
    acc.merge(tail_sum);
    return {acc.value(), bound, J, "moment-space+hurwitz-bonferroni"};
  }

  // Envelope route.
  const double coef = kmin == 1 ? nd : 0.5 * nd * (nd - 1.0);
  const double sign = kmin == 1 ? -1.0 : 1.0;
  const double p = tail.alpha * kmin;
  std::uint64_t J = std::max<std::uint64_t>(1024, opt.min_terms);
  std::uint64_t done = 0;
  compensated_sum<double> acc;
  for (;;) {
    acc.merge(detail::sum_residuals(ms, done + 1, J + 1, n, kmin, opt.workers));
    done = J;
    const auto env = detail::scan_envelope(ms, J);
    const auto h = hurwitz_zeta<double>(p, static_cast<double>(J) + 1.0, 1e-15);
    const double bound = coef * std::pow(env.constant, kmin) * h.value;
    if (bound <= tol || J >= opt.max_terms) {
      const double estimate = sign * coef * std::pow(tail.L, kmin) * h.value;
      return {acc.value() + estimate, bound, J, "moment-space+envelope"};
    }
    J *= 2;
  }
}

enum class PredictionKind { mainisdef, alpha1, riemann, riemann_scaled };

inline std::string to_string(PredictionKind k) {
  switch (k) {
    case PredictionKind::mainisdef: return "mainisdef";
    case PredictionKind::alpha1: return "alpha1";
    case PredictionKind::riemann: return "riemann";
    case PredictionKind::riemann_scaled: return "riemann_scaled";
  }
  return "?";
}

inline PredictionKind prediction_kind_from(const std::string& s) {
  if (s == "mainisdef") return PredictionKind::mainisdef;
  if (s == "alpha1") return PredictionKind::alpha1;
  if (s == "riemann") return PredictionKind::riemann;
  if (s == "riemann_scaled" || s == "riemann-scaled") return PredictionKind::riemann_scaled;
  throw domain_error("unknown prediction kind '" + s + "'");
}

struct PredictionParams {
  double c = 1.0;
  double beta = 0.0;
  double s = 2.0;
};

struct AsymptoticPrediction {
  PredictionKind kind;
  PredictionParams params;
  double n = 0.0;
  double value = 0.0;
};

/// Leading-order predictors. Values are magnitudes: for mainisdef and
/// riemann_scaled the kmin = 1 sum itself is negative.
inline AsymptoticPrediction predict(PredictionKind kind, PredictionParams params, double n) {
  if (!(n >= 1.0)) throw domain_error("n must be >= 1");
  double v = 0.0;
  switch (kind) {
    case PredictionKind::mainisdef: {
      if (!(params.beta > 0.0)) throw domain_error("mainisdef needs beta > 0");
      if (!(params.c > 0.0)) throw domain_error("mainisdef needs c > 0");
      const double a = params.beta + 1.0;
      v = std::pow(params.c * gamma_fn(a), 1.0 / a) * gamma_fn(params.beta / a) * std::pow(n, 1.0 / a);
      break;
    }
    case PredictionKind::alpha1:
      if (!(params.c > 0.0)) throw domain_error("alpha1 needs c > 0");
      v = params.c * n * std::log(n);
      break;
    case PredictionKind::riemann:
      v = n * std::log(n) + (2.0 * euler_gamma - 1.0) * n;
      break;
    case PredictionKind::riemann_scaled:
      if (!(params.s > 1.0)) throw domain_error("riemann_scaled needs s > 1");
      v = gamma_fn(1.0 - 1.0 / params.s) * std::pow(n, 1.0 / params.s);
      break;
  }
  return {kind, params, n, v};
}

struct IdentityCheck {
  double quadrature = 0.0;
  double closed_form = 0.0;
  double error_estimate = 0.0;
  std::string variant;  // "euler0" (alpha > 1) or "euler" (alpha = 1)
};

/// Numerically integrates int_0^inf (1 - exp(-L u^alpha)) / u^2 du and
/// compares with L^(1/alpha) Gamma((alpha-1)/alpha). alpha == 1 switches to
/// the compensated form int_0^1 (1 - e^{-Lu} - Lu)/u^2 + int_1^inf (1 - e^{-Lu})/u^2,
/// whose closed form is L (1 - gamma - log L).
inline IdentityCheck gamma_integral_identity_check(double L, double alpha) {
  if (!(L > 0.0)) throw domain_error("L must be positive");
  if (alpha == 1.0) {
    // (1 - e^{-z} - z) / z^2, with a series near z = 0.
    auto psi = [](double z) {
      if (z < 0.1) {
        double term = -0.5, sum = 0.0;
        for (int k = 0; k < 14; ++k) {
          sum += term;
          term *= -z / (k + 3);
        }
        return sum;
      }
      return (-std::expm1(-z) - z) / (z * z);
    };
    auto near = [&](double u) { return L * L * psi(L * u); };
    auto far = [&](double t) { return t == 0.0 ? 1.0 : -std::expm1(-L / t); };  // u = 1/t
    const auto a = integrate(near, 0.0, 1.0, 1e-14, 1e-14);
    const auto b = integrate(far, 0.0, 1.0, 1e-14, 1e-14);
    return {a.value + b.value, L * (1.0 - euler_gamma - std::log(L)), a.error + b.error, "euler"};
  }
  if (!(alpha > 1.0)) throw domain_error("identity needs alpha > 1 (or exactly 1)");
  // [0, 1]: u = v^{1/(alpha-1)} turns L u^{alpha-2} du into L dv / (alpha - 1).
  const double q = alpha / (alpha - 1.0);
  auto phi = [](double z) { return z < 1e-8 ? 1.0 - 0.5 * z : -std::expm1(-z) / z; };
  auto near = [&](double v) { return phi(L * std::pow(v, q)); };
  auto far = [&](double t) { return t == 0.0 ? 1.0 : -std::expm1(-L * std::pow(t, -alpha)); };
  const auto a = integrate(near, 0.0, 1.0, 1e-14, 1e-14);
  const auto b = integrate(far, 0.0, 1.0, 1e-14, 1e-14);
  const double quad = L / (alpha - 1.0) * a.value + b.value;
  const double closed = std::pow(L, 1.0 / alpha) * gamma_fn((alpha - 1.0) / alpha);
  return {quad, closed, L / (alpha - 1.0) * a.error + b.error, "euler0"};
}

/// One row of an n-sweep.
struct SweepRow {
  std::uint64_t n = 0;
  double value = 0.0;
  double prediction = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::quiet_NaN();
  double tail_bound = 0.0;
  std::uint64_t terms_used = 0;
};

inline constexpr const char* sweep_csv_header = "n,value,prediction,residual,tail_bound,terms_used";

}  // namespace momzeta
