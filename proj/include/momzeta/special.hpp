#pragma once

// Special functions shared by the summation engines: Euler's constant,
// the gamma function, exact Bernoulli numbers and a Hurwitz zeta routine
// that works for double as well as boost::multiprecision types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "momzeta/errors.hpp"
#include "momzeta/summation.hpp"

namespace momzeta {

/// Euler's constant to 20 significant digits.
inline constexpr long double euler_gamma_ld = 0.57721566490153286061L;
inline constexpr double euler_gamma = static_cast<double>(euler_gamma_ld);

inline constexpr double pi = 3.14159265358979323846;

namespace detail {

// Lanczos approximation, g = 7, nine coefficients. Relative error is
// around 1e-15 on the positive axis.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_coef[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

template <class Real>
Real to_real(const boost::multiprecision::cpp_int& v) {
  if constexpr (std::is_floating_point_v<Real>)
    return static_cast<Real>(v);
  else
    return Real(v.str());
}

}  // namespace detail

/// Gamma function on the real line via Lanczos plus reflection.
/// Accurate to roughly 14 significant digits on (0, 171).
inline double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (x <= 0.0 && x == std::floor(x)) throw domain_error("gamma pole at nonpositive integer");
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    const double s = std::sin(pi * x);
    return pi / (s * gamma_fn(1.0 - x));
  }
  const double z = x - 1.0;
  double acc = detail::lanczos_coef[0];
  for (int i = 1; i < 9; ++i) acc += detail::lanczos_coef[i] / (z + i);
  const double t = z + detail::lanczos_g + 0.5;
  // Split the power so t^(z+0.5) does not overflow before exp(-t) scales it.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * pi) * half * (half * std::exp(-t)) * acc;
}

/// Exact Bernoulli number B_{2r} as a rational, r >= 0. Computed once via
/// the standard recurrence and cached.
inline const boost::multiprecision::cpp_rational& bernoulli_b2n_exact(unsigned r) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  static constexpr unsigned max_index = 160;  // B_0 .. B_160
  static std::vector<cpp_rational> table;
  static std::once_flag once;
  std::call_once(once, [] {
    std::vector<cpp_rational> b(max_index + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= max_index; ++m) {
      if (m > 1 && m % 2 == 1) {
        b[m] = 0;
        continue;
      }
      // sum_{k=0}^{m} C(m+1, k) B_k = 0
      cpp_rational acc = 0;
      cpp_int binom = 1;  // C(m+1, 0)
      for (unsigned k = 0; k < m; ++k) {
        if (b[k] != 0) acc += cpp_rational(binom) * b[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      b[m] = -acc / cpp_rational(cpp_int(m + 1));
    }
    table = std::move(b);
  });
  if (2 * r > max_index) throw domain_error("Bernoulli index beyond table: 2r = " + std::to_string(2 * r));
  return table[2 * r];
}

/// B_{2r} / (2r)! as an exact rational, cached.
inline boost::multiprecision::cpp_rational bernoulli_ratio_exact(unsigned r) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  static std::vector<cpp_rational> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  while (cache.size() <= r) {
    const unsigned k = static_cast<unsigned>(cache.size());
    cpp_int fact = 1;
    for (unsigned i = 2; i <= 2 * k; ++i) fact *= i;
    cache.push_back(bernoulli_b2n_exact(k) / cpp_rational(fact));
  }
  return cache[r];
}

/// B_{2r} / (2r)! converted to Real.
template <class Real>
Real bernoulli_b2n_over_factorial(unsigned r) {
  if constexpr (std::is_same_v<Real, double>) {
    static const std::vector<double> table = [] {
      std::vector<double> t;
      for (unsigned k = 0; k <= 80; ++k) t.push_back(static_cast<double>(bernoulli_ratio_exact(k)));
      return t;
    }();
    if (r < table.size()) return table[r];
  }
  const auto q = bernoulli_ratio_exact(r);
  return detail::to_real<Real>(boost::multiprecision::numerator(q)) /
         detail::to_real<Real>(boost::multiprecision::denominator(q));
}

template <class Real>
struct series_result {
  Real value{};
  Real bound{};  // certified bound on the neglected remainder
  std::uint64_t terms = 0;
};

/// Hurwitz zeta H(p, a) = sum_{j>=0} (a + j)^(-p) for real p > 1, a > 0.
///
/// Sums a few leading terms directly and finishes with Euler-Maclaurin.
/// For x^(-p) the Euler-Maclaurin remainder is smaller in magnitude than
/// the first omitted correction, which is what `bound` reports.
template <class Real>
series_result<Real> hurwitz_zeta(const Real& p, const Real& a, const Real& rel_tol) {
  using std::abs;
  using std::pow;
  if (!(p > 1)) throw divergence_error("Hurwitz zeta needs exponent > 1");
  if (!(a > 0)) throw domain_error("Hurwitz zeta needs shift > 0");

  static constexpr unsigned max_corrections = 70;
  std::uint64_t direct = 0;
  // Euler-Maclaurin terms shrink while (p + 2r) < 2 pi X, so start with
  // X comparable to p and grow it until the corrections converge.
  {
    const double pd = static_cast<double>(p);
    const double ad = static_cast<double>(a);
    if (ad < pd / 4.0 + 2.0) direct = static_cast<std::uint64_t>(std::ceil(pd / 4.0 + 2.0 - ad));
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Real x = a + Real(direct);
    compensated_sum<Real> head;
    for (std::uint64_t j = direct; j-- > 0;) head.add(pow(a + Real(j), -p));

    const Real x_pow = pow(x, -p);  // X^-p
    compensated_sum<Real> em;
    em.add(x * x_pow / (p - 1));
    em.add(x_pow / 2);
    Real poch = p;              // rising factorial (p)_{2r-1}
    Real xp = x_pow / x;        // X^{-p-2r+1}
    const Real inv_x2 = 1 / (x * x);
    Real prev_mag = std::numeric_limits<double>::infinity();
    bool converged = false;
    Real last_bound = 0;
    for (unsigned r = 1; r <= max_corrections; ++r) {
      const Real term = bernoulli_b2n_over_factorial<Real>(r) * poch * xp;
      const Real mag = abs(term);
      const Real scale = abs(head.value() + em.value());
      if (mag > prev_mag) break;  // asymptotic series started to diverge
      if (mag <= rel_tol * scale) {
        last_bound = mag;
        converged = true;
        break;
      }
      em.add(term);
      prev_mag = mag;
      poch *= (p + 2 * r - 1) * (p + 2 * r);
      xp *= inv_x2;
    }
    if (converged) {
      head.merge(em);
      return {head.value(), last_bound, direct};
    }
    direct = direct * 2 + 8;
  }
  throw precision_exhausted("Hurwitz zeta did not converge");
}

/// Riemann zeta at real p > 1, to relative tolerance rel_tol.
template <class Real>
series_result<Real> riemann_zeta_series(const Real& p, const Real& rel_tol) {
  return hurwitz_zeta<Real>(p, Real(1), rel_tol);
}

}  // namespace momzeta
