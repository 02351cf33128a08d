#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "momzeta/errors.hpp"
#include "momzeta/summation.hpp"

namespace momzeta {

struct quadrature_result {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr double gk_xk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct gk_segment {
  double a, b, value, error;
  bool operator<(const gk_segment& o) const { return error < o.error; }
};

template <class F>
gk_segment gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = fc * gk_wk[7];
  double gauss = fc * gk_wg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * gk_xk[i];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    kron += gk_wk[i] * (f1 + f2);
    if (i % 2 == 1) gauss += gk_wg[i / 2] * (f1 + f2);
  }
  return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
/// Throws quadrature_failure when the tolerance is not met within
/// `max_intervals` subdivisions.
template <class F>
quadrature_result integrate(F&& f, double a, double b, double abs_tol, double rel_tol,
                            std::size_t max_intervals = 4000) {
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<detail::gk_segment> heap;
  heap.push(detail::gk15(f, a, b));
  double total = heap.top().value;
  double err = heap.top().error;
  std::size_t count = 1;
  const double eps_floor = 50.0 * std::numeric_limits<double>::epsilon();
  while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (count >= max_intervals) {
      throw quadrature_failure("tolerance not reached on [" + std::to_string(a) + ", " + std::to_string(b) +
                               "], error estimate " + std::to_string(err));
    }
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (std::abs(worst.b - worst.a) <= eps_floor * std::max(std::abs(worst.a), std::abs(worst.b))) {
      throw quadrature_failure("interval collapsed near x = " + std::to_string(mid));
    }
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++count;
    // Re-sum from the heap occasionally to stop drift from incremental updates.
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    if (count % 64 == 0) {
      auto copy = heap;
      compensated_sum<double> v, e;
      while (!copy.empty()) {
        v.add(copy.top().value);
        e.add(copy.top().error);
        copy.pop();
      }
      total = v.value();
      err = e.value();
    }
  }
  compensated_sum<double> v, e;
  while (!heap.empty()) {
    v.add(heap.top().value);
    e.add(heap.top().error);
    heap.pop();
  }
  return {v.value(), e.value(), count};
}

/// Integrates over consecutive breakpoints, adapting on each piece.
template <class F>
quadrature_result integrate_pieces(F&& f, const std::vector<double>& breaks, double abs_tol, double rel_tol,
                                   std::size_t max_intervals = 4000) {
  compensated_sum<double> v;
  double err = 0.0;
  std::size_t n = 0;
  const double pieces = std::max<std::size_t>(1, breaks.size() - 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const auto r = integrate(f, breaks[i], breaks[i + 1], abs_tol / pieces, rel_tol, max_intervals);
    v.add(r.value);
    err += r.error;
    n += r.intervals;
  }
  return {v.value(), err, n};
}

/// Gauss-Legendre rule mapped to [0, 1], nodes computed by Newton iteration
/// in the working type so it can be used at multiprecision.
template <class Real>
struct gauss_legendre_rule {
  std::vector<Real> nodes;
  std::vector<Real> weights;

  explicit gauss_legendre_rule(unsigned order) {
    using std::abs;
    if (order == 0) throw domain_error("Gauss-Legendre order must be positive");
    nodes.resize(order);
    weights.resize(order);
    const Real eps = std::numeric_limits<Real>::epsilon();
    for (unsigned i = 0; i < (order + 1) / 2; ++i) {
      Real x = std::cos(3.14159265358979323846 * (i + 0.75) / (order + 0.5));
      Real dp = 0;
      for (int it = 0; it < 100; ++it) {
        Real p0 = 1, p1 = x;
        for (unsigned k = 2; k <= order; ++k) {
          Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1);
        const Real dx = p1 / dp;
        x -= dx;
        if (abs(dx) <= 4 * eps) break;
      }
      // Recompute the derivative at the converged node for the weight.
      Real p0 = 1, p1 = x;
      for (unsigned k = 2; k <= order; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order == 1 ? Real(1) : order * (x * p1 - p0) / (x * x - 1);
      const Real w = 2 / ((1 - x * x) * dp * dp);
      // map [-1, 1] -> [0, 1]
      nodes[i] = (1 - x) / 2;
      nodes[order - 1 - i] = (1 + x) / 2;
      weights[i] = w / 2;
      weights[order - 1 - i] = w / 2;
    }
  }
};

}  // namespace momzeta
