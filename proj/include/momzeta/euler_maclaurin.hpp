#pragma once

// The sum-integral defect
//
//   D_n = lim_N [ sum_{j=1}^N (1 - 1/j)^n - int_1^N (1 - 1/x)^n dx ],
//
// computed directly and through its sawtooth-kernel representation
//
//   D_n = 1/2 + n int_1^inf ({x} - 1/2) (1 - 1/x)^(n-1) x^-2 dx.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "momzeta/errors.hpp"
#include "momzeta/quadrature.hpp"
#include "momzeta/special.hpp"
#include "momzeta/summation.hpp"

namespace momzeta {

/// D_n(N) = S_n(N) - I_n(N) in double precision.
///
/// Both pieces are shifted by their O(N) parts, sum_j 1 = N and
/// int_1^N 1 dx = N - 1, before combining.
inline double defect_direct(unsigned n, std::uint64_t N) {
  if (N < 2) throw domain_error("defect_direct needs N >= 2");
  if (n == 0) return 1.0;
  const double nd = n;
  compensated_sum<double> s;  // sum_j [(1 - 1/j)^n - 1]
  for (std::uint64_t j = N; j >= 1; --j) s.add(std::expm1(nd * std::log1p(-1.0 / static_cast<double>(j))));
  // int_1^N [(1 - 1/x)^n - 1] dx with x = e^v.
  auto integrand = [nd](double v) {
    const double t = std::exp(-v);
    return std::expm1(nd * std::log1p(-t)) / t;
  };
  const auto i = integrate(integrand, 0.0, std::log(static_cast<double>(N)), 1e-12, 1e-15, 20000);
  return s.value() - i.value + 1.0;
}

enum class DefectMethod { dnform, direct };

template <class Real>
struct DefectResult {
  unsigned n = 0;
  Real d_value{};
  Real tail_bound{};
  DefectMethod method = DefectMethod::dnform;
  std::uint64_t intervals = 0;
};

struct DnformOptions {
  unsigned nodes = 48;         // Gauss-Legendre points per unit interval
  std::uint64_t cutoff = 0;    // 0: max(64, 4n)
};

/// D_n via the sawtooth representation.
///
/// Unit intervals [j, j+1) for j < X are integrated with a fixed
/// Gauss-Legendre rule, on which {x} - 1/2 = x - j - 1/2 is a polynomial.
/// The remaining integral over [X, inf) is the Euler-Maclaurin series
/// -sum_r B_2r/(2r)! g^(2r-2)(X) with g = (1 - 1/x)^(n-1) x^-2; the
/// derivatives come from the exact Taylor expansion of
/// (X - 1 + h)^(n-1) (X + h)^(-n-1). tail_bound is the first omitted
/// correction plus any intervals skipped as negligible.
template <class Real = double>
DefectResult<Real> defect_dnform(unsigned n, const Real& tol, DnformOptions opt = {}) {
  using std::abs;
  using std::pow;
  if (n < 1) throw domain_error("defect_dnform needs n >= 1");
  if (!(tol > 0)) throw domain_error("tol must be positive");
  const std::uint64_t X = opt.cutoff ? opt.cutoff : std::max<std::uint64_t>(64, 4 * std::uint64_t{n});
  const gauss_legendre_rule<Real> rule(opt.nodes);
  const Real half = Real(1) / 2;
  const Real nr = Real(n);

  compensated_sum<Real> body;
  Real skipped = 0;
  for (std::uint64_t j = 1; j < X; ++j) {
    const Real jr = Real(j);
    // |integral| <= max g / 4 on the interval; g <= (1 - 1/(j+1))^(n-1) / j^2.
    const Real envelope = pow(1 - 1 / (jr + 1), n - 1) / (jr * jr) / 4;
    if (nr * envelope < tol * Real(1e-6)) {
      skipped += envelope;
      continue;
    }
    compensated_sum<Real> piece;
    for (unsigned i = 0; i < opt.nodes; ++i) {
      const Real t = rule.nodes[i];
      const Real x = jr + t;
      const Real g = pow(1 - 1 / x, n - 1) / (x * x);
      piece.add(rule.weights[i] * (t - half) * g);
    }
    body.merge(piece);
  }

  // Tail over [X, inf).
  const Real xr = Real(X);
  const Real g0 = pow(1 - 1 / xr, n - 1) / (xr * xr);
  constexpr unsigned max_r = 70;
  const unsigned order = 2 * max_r;
  std::vector<Real> a(order + 1), b(order + 1), c(order + 1);
  a[0] = 1;
  b[0] = 1;
  for (unsigned i = 1; i <= order; ++i) {
    a[i] = i <= n - 1 ? a[i - 1] * Real(n - i) / (Real(i) * (xr - 1)) : Real(0);
    b[i] = -b[i - 1] * Real(n + i) / (Real(i) * xr);
  }
  for (unsigned m = 0; m <= order; ++m) {
    compensated_sum<Real> s;
    for (unsigned i = 0; i <= m; ++i) s.add(a[i] * b[m - i]);
    c[m] = g0 * s.value();
  }
  compensated_sum<Real> tail;
  Real factorial = 1;  // (2r - 2)!
  Real prev = std::numeric_limits<double>::infinity();
  Real tail_bound = 0;
  bool converged = false;
  for (unsigned r = 1; r <= max_r; ++r) {
    if (r > 1) factorial *= Real(2 * r - 3) * Real(2 * r - 2);
    const Real term = -bernoulli_b2n_over_factorial<Real>(r) * factorial * c[2 * r - 2];
    const Real mag = abs(term);
    if (mag <= tol * Real(1e-3) || mag > prev) {
      tail_bound = mag;
      converged = mag <= tol;
      break;
    }
    tail.add(term);
    prev = mag;
  }
  if (!converged) throw quadrature_failure("Euler-Maclaurin tail of D_n did not converge; raise the cutoff");

  body.merge(tail);
  DefectResult<Real> out;
  out.n = n;
  out.d_value = half + nr * body.value();
  out.tail_bound = nr * (tail_bound + skipped);
  out.method = DefectMethod::dnform;
  out.intervals = X - 1;
  return out;
}

}  // namespace momzeta
