#pragma once

// Distributions on [0, 1], their moments, samplers and edge (tail) models.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

#include "momzeta/errors.hpp"
#include "momzeta/quadrature.hpp"
#include "momzeta/rng.hpp"
#include "momzeta/special.hpp"

namespace momzeta {

/// Edge behaviour f(1 - u) = c u^beta + O(u^(beta + delta)) near x = 1.
struct EdgeParams {
  double c = 1.0;
  double beta = 0.0;
  double delta = 1.0;
};

/// m(x) ~ L x^-alpha (1 + O(x^-delta)) as x -> infinity.
struct TailModel {
  double L = 1.0;
  double alpha = 1.0;
  double delta = 1.0;
};

struct UniformFamily {};

/// Density (beta + 1)(1 - x)^beta.
struct BetaEdgeFamily {
  double beta = 0.0;
  double c = 1.0;
  double delta = 1.0;
};

/// Piecewise linear density through (x_i, f_i). Immutable; copies share
/// the grid.
class TabulatedDensity {
 public:
  TabulatedDensity(std::vector<double> x, std::vector<double> f, std::optional<EdgeParams> edge = std::nullopt,
                   bool normalize = false) {
    auto owned = std::make_shared<data>();
    auto& d = *owned;
    if (x.size() != f.size()) throw invalid_distribution("x and f columns differ in length");
    if (x.size() < 2) throw invalid_distribution("need at least two grid points");
    if (x.front() != 0.0 || x.back() != 1.0) throw invalid_distribution("grid must cover [0, 1] exactly");
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!std::isfinite(x[i]) || !std::isfinite(f[i])) throw invalid_distribution("non-finite grid value");
      if (f[i] < 0.0) throw invalid_distribution("negative density at x = " + std::to_string(x[i]));
      if (i > 0 && !(x[i] > x[i - 1])) throw invalid_distribution("x must be strictly increasing");
    }
    d.cum.assign(x.size(), 0.0);
    for (std::size_t i = 1; i < x.size(); ++i) d.cum[i] = d.cum[i - 1] + 0.5 * (f[i] + f[i - 1]) * (x[i] - x[i - 1]);
    const double total = d.cum.back();
    if (!(total > 0.0)) throw invalid_distribution("density integrates to zero");
    if (normalize) {
      for (auto& v : f) v /= total;
      for (auto& v : d.cum) v /= total;
    } else if (std::abs(total - 1.0) > 1e-10) {
      throw invalid_distribution("density integrates to " + std::to_string(total) + ", not 1");
    }
    d.cum.back() = 1.0;
    if (edge) {
      if (!(edge->c > 0.0) || !(edge->beta >= 0.0) || !(edge->delta > 0.0))
        throw invalid_distribution("edge parameters need c > 0, beta >= 0, delta > 0");
    }
    d.x = std::move(x);
    d.f = std::move(f);
    d.edge = edge;
    data_ = std::move(owned);
  }

  const std::vector<double>& x() const { return data_->x; }
  const std::vector<double>& f() const { return data_->f; }
  const std::optional<EdgeParams>& edge() const { return data_->edge; }

  double density(double t) const {
    const auto& d = *data_;
    if (t < 0.0 || t > 1.0) return 0.0;
    const std::size_t i = segment(t);
    const double w = (t - d.x[i]) / (d.x[i + 1] - d.x[i]);
    return d.f[i] + w * (d.f[i + 1] - d.f[i]);
  }

  double cdf(double t) const {
    const auto& d = *data_;
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const std::size_t i = segment(t);
    return d.cum[i] + segment_mass(i, t - d.x[i]);
  }

  /// Monotone inversion: locate the segment, then bisect to 1e-12.
  double inverse_cdf(double u) const {
    const auto& d = *data_;
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    auto it = std::upper_bound(d.cum.begin(), d.cum.end(), u);
    std::size_t i = static_cast<std::size_t>(std::distance(d.cum.begin(), it));
    i = std::clamp<std::size_t>(i, 1, d.x.size() - 1) - 1;
    double lo = d.x[i], hi = d.x[i + 1];
    const double target = u - d.cum[i];
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      if (segment_mass(i, mid - d.x[i]) < target)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  }

 private:
  struct data {
    std::vector<double> x, f, cum;
    std::optional<EdgeParams> edge;
  };

  std::size_t segment(double t) const {
    const auto& x = data_->x;
    auto it = std::upper_bound(x.begin(), x.end(), t);
    std::size_t i = static_cast<std::size_t>(std::distance(x.begin(), it));
    return std::clamp<std::size_t>(i, 1, x.size() - 1) - 1;
  }

  // Mass of segment i between x_i and x_i + s.
  double segment_mass(std::size_t i, double s) const {
    const auto& d = *data_;
    const double h = d.x[i + 1] - d.x[i];
    return s * (d.f[i] + 0.5 * (d.f[i + 1] - d.f[i]) * s / h);
  }

  std::shared_ptr<const data> data_;
};

/// Reads a density table from CSV with header `x,f`.
inline TabulatedDensity parse_tabulated_csv(std::istream& in, std::optional<EdgeParams> edge = std::nullopt,
                                            bool normalize = false) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  auto to_double = [](const std::string& s, std::size_t line) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end)
      throw invalid_distribution("bad number '" + s + "' on line " + std::to_string(line));
    return v;
  };
  std::string line;
  if (!std::getline(in, line)) throw invalid_distribution("empty CSV");
  {
    std::string h = trim(line);
    h.erase(std::remove_if(h.begin(), h.end(), [](char c) { return c == ' ' || c == '\t'; }), h.end());
    if (h != "x,f") throw invalid_distribution("CSV header must be 'x,f', got '" + trim(line) + "'");
  }
  std::vector<double> xs, fs;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw invalid_distribution("missing comma on line " + std::to_string(lineno));
    xs.push_back(to_double(trim(line.substr(0, comma)), lineno));
    fs.push_back(to_double(trim(line.substr(comma + 1)), lineno));
  }
  return TabulatedDensity(std::move(xs), std::move(fs), edge, normalize);
}

inline TabulatedDensity load_tabulated_csv(const std::string& path, std::optional<EdgeParams> edge = std::nullopt,
                                           bool normalize = false) {
  std::ifstream in(path);
  if (!in) throw invalid_distribution("cannot open " + path);
  return parse_tabulated_csv(in, edge, normalize);
}

class EdgeDistribution {
 public:
  using family_type = std::variant<UniformFamily, BetaEdgeFamily, TabulatedDensity>;

  static EdgeDistribution uniform() { return EdgeDistribution(UniformFamily{}); }

  /// Pure edge family with density c (1 - x)^beta. Normalization forces
  /// c = beta + 1; passing any other c is rejected.
  static EdgeDistribution beta_edge(double beta, std::optional<double> c = std::nullopt, double delta = 1.0) {
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw invalid_distribution("beta must be >= 0");
    if (!(delta > 0.0)) throw invalid_distribution("delta must be > 0");
    const double cn = beta + 1.0;
    if (c && std::abs(*c - cn) > 1e-12 * cn)
      throw invalid_distribution("c = " + std::to_string(*c) + " does not normalize (1-x)^" + std::to_string(beta) +
                                 "; expected c = beta + 1");
    return EdgeDistribution(BetaEdgeFamily{beta, cn, delta});
  }

  static EdgeDistribution tabulated(TabulatedDensity t) { return EdgeDistribution(std::move(t)); }

  const family_type& family() const { return family_; }

  bool is_uniform() const { return std::holds_alternative<UniformFamily>(family_); }

  double density(double x) const {
    if (x < 0.0 || x > 1.0) return 0.0;
    return std::visit(
        [x](const auto& fam) -> double {
          using T = std::decay_t<decltype(fam)>;
          if constexpr (std::is_same_v<T, UniformFamily>)
            return 1.0;
          else if constexpr (std::is_same_v<T, BetaEdgeFamily>)
            return fam.c * std::pow(1.0 - x, fam.beta);
          else
            return fam.density(x);
        },
        family_);
  }

  double cdf(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return std::visit(
        [x](const auto& fam) -> double {
          using T = std::decay_t<decltype(fam)>;
          if constexpr (std::is_same_v<T, UniformFamily>)
            return x;
          else if constexpr (std::is_same_v<T, BetaEdgeFamily>)
            return -std::expm1((fam.beta + 1.0) * std::log1p(-x));
          else
            return fam.cdf(x);
        },
        family_);
  }

  double inverse_cdf(double u) const {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return std::visit(
        [u](const auto& fam) -> double {
          using T = std::decay_t<decltype(fam)>;
          if constexpr (std::is_same_v<T, UniformFamily>)
            return u;
          else if constexpr (std::is_same_v<T, BetaEdgeFamily>)
            return -std::expm1(std::log1p(-u) / (fam.beta + 1.0));  // 1 - (1-u)^{1/(beta+1)}
          else
            return fam.inverse_cdf(u);
        },
        family_);
  }

  std::string label() const {
    return std::visit(
        [](const auto& fam) -> std::string {
          using T = std::decay_t<decltype(fam)>;
          if constexpr (std::is_same_v<T, UniformFamily>)
            return "uniform";
          else if constexpr (std::is_same_v<T, BetaEdgeFamily>) {
            std::ostringstream os;
            os.precision(17);
            os << "beta-edge(beta=" << fam.beta << ",c=" << fam.c << ")";
            return os.str();
          } else
            return "tabulated(" + std::to_string(fam.x().size()) + " points)";
        },
        family_);
  }

 private:
  explicit EdgeDistribution(family_type f) : family_(std::move(f)) {}
  family_type family_;
};

namespace detail {

// Breakpoints in u = 1 - x, graded geometrically toward u = 0 where the
// weight (1 - u)^k concentrates for large k.
inline std::vector<double> graded_breaks(std::uint64_t k, std::vector<double> extra) {
  std::vector<double> b = std::move(extra);
  b.push_back(0.0);
  b.push_back(1.0);
  const double scale = 1.0 / static_cast<double>(k + 1);
  for (int i = -30; i <= 6; ++i) {
    const double u = std::ldexp(scale, i);
    if (u > 0.0 && u < 1.0) b.push_back(u);
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

}  // namespace detail

/// k-th moment by adaptive quadrature in u = 1 - x. Works for every family
/// and is the only route for tabulated densities.
inline double moment_quadrature(const EdgeDistribution& dist, std::uint64_t k, double abs_tol = 1e-14) {
  if (k < 1) throw domain_error("moment order must be >= 1");
  std::vector<double> extra;
  if (const auto* tab = std::get_if<TabulatedDensity>(&dist.family())) {
    for (double x : tab->x()) extra.push_back(1.0 - x);
  }
  const double kd = static_cast<double>(k);
  auto integrand = [&](double u) {
    const double w = std::exp(kd * std::log1p(-u));
    return w == 0.0 ? 0.0 : w * dist.density(1.0 - u);
  };
  const auto breaks = detail::graded_breaks(k, std::move(extra));
  const auto r = integrate_pieces(integrand, breaks, abs_tol, 1e-13, 2000);
  if (r.error > 1e-12) throw quadrature_failure("moment error estimate " + std::to_string(r.error));
  return r.value;
}

/// k-th moment: closed form for uniform and edge families, quadrature for
/// tabulated densities.
inline double moment(const EdgeDistribution& dist, std::uint64_t k) {
  if (k < 1) throw domain_error("moment order must be >= 1");
  const double kd = static_cast<double>(k);
  return std::visit(
      [&](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UniformFamily>) {
          return 1.0 / (kd + 1.0);
        } else if constexpr (std::is_same_v<T, BetaEdgeFamily>) {
          // c * B(k+1, beta+1); integer beta reduces to beta! / prod (k+i).
          if (fam.beta == std::floor(fam.beta) && fam.beta <= 20.0) {
            const int b = static_cast<int>(fam.beta);
            double r = fam.c;
            for (int i = 1; i <= b + 1; ++i) r *= (i <= b ? static_cast<double>(i) : 1.0) / (kd + i);
            return r;
          }
          return fam.c * boost::math::beta(kd + 1.0, fam.beta + 1.0);
        } else {
          return moment_quadrature(dist, k);
        }
      },
      dist.family());
}

/// Tail constants: L = c Gamma(beta + 1), alpha = beta + 1.
inline TailModel tail_model(const EdgeDistribution& dist) {
  return std::visit(
      [](const auto& fam) -> TailModel {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UniformFamily>) {
          return {1.0, 1.0, 1.0};
        } else if constexpr (std::is_same_v<T, BetaEdgeFamily>) {
          return {fam.c * gamma_fn(fam.beta + 1.0), fam.beta + 1.0, fam.delta};
        } else {
          if (!fam.edge()) throw missing_edge_data("tabulated density has no (c, beta, delta)");
          const auto& e = *fam.edge();
          return {e.c * gamma_fn(e.beta + 1.0), e.beta + 1.0, e.delta};
        }
      },
      dist.family());
}

/// Inverse-CDF sample driven by the caller's generator.
template <class URBG>
double sample(const EdgeDistribution& dist, URBG& rng) {
  return dist.inverse_cdf(uniform01(rng));
}

enum class Provenance { from_distribution, abstract };

/// m_j = scale * (j + shift)^-exponent exactly. Lets summation engines use
/// Hurwitz zeta tails instead of envelope bounds.
struct PowerLaw {
  double scale = 1.0;
  double shift = 0.0;
  double exponent = 1.0;
};

/// Decreasing sequence m_1 >= m_2 >= ... in (0, 1] with an optional tail
/// model. Immutable once built.
class MomentSequence {
 public:
  using evaluator = std::function<double(std::uint64_t)>;

  MomentSequence(evaluator eval, std::optional<TailModel> tail, Provenance prov, std::string label,
                 std::optional<PowerLaw> exact = std::nullopt)
      : eval_(std::move(eval)), tail_(tail), provenance_(prov), label_(std::move(label)), exact_(exact) {}

  double operator()(std::uint64_t j) const {
    if (j < 1) throw domain_error("moment index starts at 1");
    return eval_(j);
  }

  const std::optional<TailModel>& tail() const { return tail_; }
  Provenance provenance() const { return provenance_; }
  const std::string& label() const { return label_; }
  const std::optional<PowerLaw>& exact_power() const { return exact_; }

 private:
  evaluator eval_;
  std::optional<TailModel> tail_;
  Provenance provenance_;
  std::string label_;
  std::optional<PowerLaw> exact_;
};

/// Abstract sequence m_j = j^-s. s = 1 is the Riemann case.
inline MomentSequence moment_sequence_power(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw domain_error("power sequence needs s > 0");
  auto eval = [s](std::uint64_t j) { return s == 1.0 ? 1.0 / static_cast<double>(j) : std::pow(static_cast<double>(j), -s); };
  std::ostringstream os;
  os.precision(17);
  os << "power(s=" << s << ")";
  // The sequence is exactly L j^-alpha, so no correction term: delta = inf.
  return MomentSequence(eval, TailModel{1.0, s, std::numeric_limits<double>::infinity()}, Provenance::abstract, os.str(),
                        PowerLaw{1.0, 0.0, s});
}

inline MomentSequence moment_sequence(const EdgeDistribution& dist) {
  std::optional<TailModel> tail;
  try {
    tail = tail_model(dist);
  } catch (const missing_edge_data&) {
    tail.reset();
  }
  std::optional<PowerLaw> exact;
  if (dist.is_uniform()) exact = PowerLaw{1.0, 1.0, 1.0};
  if (const auto* be = std::get_if<BetaEdgeFamily>(&dist.family()); be && be->beta == 0.0) exact = PowerLaw{1.0, 1.0, 1.0};

  if (std::holds_alternative<TabulatedDensity>(dist.family())) {
    // Spot-check the sequence at a geometric set of indices.
    double prev_j_m = 2.0;
    for (std::uint64_t j = 1; j <= 4096; j = j < 4 ? j + 1 : j * 2) {
      const double mj = moment(dist, j);
      const double mj1 = moment(dist, j + 1);
      if (!(mj > 0.0) || mj > 1.0 + 1e-12) throw invalid_tail("moment m_" + std::to_string(j) + " outside (0, 1]");
      if (mj1 > mj) throw invalid_tail("moments increase at j = " + std::to_string(j));
      if (mj > prev_j_m) throw invalid_tail("moments increase before j = " + std::to_string(j));
      prev_j_m = mj1;
    }
    // User-supplied edge data must describe the density's actual edge.
    if (tail) {
      const double j = 4096.0;
      const double scaled = std::pow(j, tail->alpha) * moment(dist, 4096);
      if (std::abs(scaled - tail->L) > 0.25 * tail->L)
        throw invalid_tail("j^alpha m_j = " + std::to_string(scaled) + " at j = 4096 is far from L = " +
                           std::to_string(tail->L) + "; edge parameters do not match the density");
    }
  }
  auto eval = [dist](std::uint64_t j) { return moment(dist, j); };
  return MomentSequence(eval, tail, Provenance::from_distribution, dist.label(), exact);
}

}  // namespace momzeta
