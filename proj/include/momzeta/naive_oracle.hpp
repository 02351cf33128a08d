#pragma once

// Literal evaluation of sum_{k=kmin}^n (-1)^k C(n,k) zeta_F(k) at extended
// precision. The binomial coefficients reach ~2^n, so the working
// precision must exceed n bits by a margin; this is the cancellation oracle
// for alt_sum_stable.

#include <cstdint>
#include <functional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "momzeta/errors.hpp"
#include "momzeta/special.hpp"

namespace momzeta {

using hp_float = boost::multiprecision::mpfr_float;

/// Sets the default mpfr_float precision (in bits) for the current scope.
class scoped_precision {
 public:
  explicit scoped_precision(unsigned bits) : saved_(hp_float::default_precision()) {
    hp_float::default_precision(bits_to_digits(bits));
  }
  ~scoped_precision() { hp_float::default_precision(saved_); }
  scoped_precision(const scoped_precision&) = delete;
  scoped_precision& operator=(const scoped_precision&) = delete;

  static unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(bits * 0.30103) + 2; }

 private:
  unsigned saved_;
};

/// k -> zeta_F(k) at the current default precision.
using ZetaSource = std::function<hp_float(unsigned k)>;

/// zeta_F(k) for m_j = (j + shift)^-s, i.e. the Hurwitz value H(s k, 1 + shift).
/// shift = 0 with s = 1 is the Riemann zeta function; shift = 1 with s = 1
/// is the uniform distribution's moment zeta function.
inline ZetaSource power_zeta_source(double s, double shift = 0.0) {
  return [s, shift](unsigned k) {
    const hp_float p = hp_float(s) * k;
    const hp_float tol = boost::multiprecision::pow(hp_float(2), -static_cast<int>(hp_float::default_precision() * 3.33));
    return hurwitz_zeta<hp_float>(p, hp_float(1) + hp_float(shift), tol).value;
  };
}

struct NaiveOptions {
  unsigned precision_bits = 0;  // 0: n + 96
  unsigned max_n = 256;
};

/// The alternating sum at high precision, returned at that precision.
inline hp_float alt_sum_naive_hp(unsigned n, int kmin, const ZetaSource& zeta, NaiveOptions opt = {}) {
  if (kmin != 1 && kmin != 2) throw domain_error("kmin must be 1 or 2");
  if (n < static_cast<unsigned>(kmin)) throw domain_error("n must be >= kmin");
  if (n > opt.max_n)
    throw precision_exhausted("naive oracle capped at n = " + std::to_string(opt.max_n) + ", got " + std::to_string(n));
  const unsigned bits = opt.precision_bits ? opt.precision_bits : n + 96;
  if (bits < n + 64)
    throw precision_exhausted("need at least n + 64 = " + std::to_string(n + 64) + " bits, got " + std::to_string(bits));
  scoped_precision guard(bits);

  boost::multiprecision::cpp_int binom = 1;  // C(n, k), exact
  for (unsigned k = 1; k < static_cast<unsigned>(kmin); ++k) binom = binom * (n - k + 1) / k;
  hp_float acc = 0;
  for (unsigned k = static_cast<unsigned>(kmin); k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    const hp_float term = hp_float(binom.str()) * zeta(k);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

inline double alt_sum_naive(unsigned n, int kmin, const ZetaSource& zeta, NaiveOptions opt = {}) {
  return alt_sum_naive_hp(n, kmin, zeta, opt).convert_to<double>();
}

}  // namespace momzeta
