#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "momzeta/dist_core.hpp"
#include "momzeta/errors.hpp"
#include "momzeta/special.hpp"
#include "momzeta/summation.hpp"

namespace momzeta {

/// A truncated series value together with a bound on what was left out.
struct SumResult {
  double value = 0.0;
  double tail_bound = 0.0;
  std::uint64_t terms_used = 0;
  std::string method;
};

/// Riemann zeta at integer k >= 2: direct head plus Euler-Maclaurin tail.
inline SumResult riemann_zeta_int(int k) {
  if (k <= 1) throw divergence_error("zeta(" + std::to_string(k) + ") diverges (harmonic series)");
  constexpr std::uint64_t head = 16;
  compensated_sum<double> s;
  for (std::uint64_t j = head; j >= 1; --j) s.add(std::pow(static_cast<double>(j), -k));
  const auto tail = hurwitz_zeta<double>(k, static_cast<double>(head + 1), 1e-17);
  s.add(tail.value);
  return {s.value(), tail.bound + 2.0 * std::numeric_limits<double>::epsilon() * s.value(), head + tail.terms,
          "direct+euler-maclaurin"};
}

/// Abscissa of convergence 1/alpha of the moment zeta function.
inline double convergence_abscissa(const MomentSequence& ms) {
  if (!ms.tail()) throw tail_unavailable("sequence " + ms.label() + " has no tail model");
  return 1.0 / ms.tail()->alpha;
}

namespace detail {

// Envelope constant for m_j <= C j^-alpha beyond the scanned range: the
// largest j^alpha m_j seen on [J/2, J], never below L, inflated by 5%.
struct tail_envelope {
  double constant = 0.0;
  double observed = 0.0;
};

inline tail_envelope scan_envelope(const MomentSequence& ms, std::uint64_t upto) {
  const auto& t = *ms.tail();
  double seen = 0.0;
  const std::uint64_t lo = std::max<std::uint64_t>(1, upto / 2);
  // Sample at most ~256 indices; the sequence is smooth in j.
  const std::uint64_t step = std::max<std::uint64_t>(1, (upto - lo) / 256);
  for (std::uint64_t j = lo; j <= upto; j += step)
    seen = std::max(seen, std::pow(static_cast<double>(j), t.alpha) * ms(j));
  seen = std::max(seen, std::pow(static_cast<double>(upto), t.alpha) * ms(upto));
  return {1.05 * std::max(seen, t.L), seen};
}

}  // namespace detail

struct ZetaOptions {
  std::uint64_t terms = 0;           // force this truncation index
  std::uint64_t max_terms = 1 << 24; // cap for the adaptive search
  double abscissa_margin = 1e-9;
};

/// zeta_F(s) = sum_{k>=1} m_k^s with a certified truncation bound.
inline SumResult moment_zeta(const MomentSequence& ms, double s, double tol, ZetaOptions opt = {}) {
  if (!ms.tail()) throw tail_unavailable("sequence " + ms.label() + " has no tail model");
  if (!(tol > 0.0)) throw domain_error("tol must be positive");
  const auto& tail = *ms.tail();
  const double abscissa = 1.0 / tail.alpha;
  if (!(s > abscissa + opt.abscissa_margin))
    throw divergence_error("zeta_F(" + std::to_string(s) + ") with abscissa " + std::to_string(abscissa));

  if (const auto& pw = ms.exact_power()) {
    // Exact tail: sum_{j>N} (scale (j+shift)^-e)^s = scale^s H(e s, N + 1 + shift).
    const std::uint64_t n = opt.terms ? opt.terms : 64;
    compensated_sum<double> acc;
    for (std::uint64_t j = n; j >= 1; --j) acc.add(std::pow(ms(j), s));
    const double p = pw->exponent * s;
    const auto h = hurwitz_zeta<double>(p, static_cast<double>(n) + 1.0 + pw->shift, 1e-17);
    const double scale = std::pow(pw->scale, s);
    acc.add(scale * h.value);
    const double bound = scale * h.bound + 4.0 * std::numeric_limits<double>::epsilon() * acc.value();
    return {acc.value(), bound, n, "direct+hurwitz-tail"};
  }

  // General sequences: add the model tail L^s H(alpha s, N+1) and bound the
  // error by the envelope (C^s) H(alpha s, N+1), doubling N until it is <= tol.
  compensated_sum<double> acc;
  std::uint64_t done = 0;
  std::uint64_t n = opt.terms ? opt.terms : 1024;
  const double p = tail.alpha * s;
  for (;;) {
    for (std::uint64_t j = done + 1; j <= n; ++j) acc.add(std::pow(ms(j), s));
    done = n;
    const auto env = detail::scan_envelope(ms, n);
    const auto h = hurwitz_zeta<double>(p, static_cast<double>(n) + 1.0, 1e-15);
    const double bound = std::pow(env.constant, s) * h.value;
    if (bound <= tol || opt.terms || n >= opt.max_terms) {
      const double estimate = std::pow(tail.L, s) * h.value;
      return {acc.value() + estimate, bound, n, "direct+envelope-tail"};
    }
    n *= 2;
  }
}

}  // namespace momzeta
