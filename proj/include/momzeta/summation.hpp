#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace momzeta {

// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays
// accurate when an incoming term is larger than the running sum.
template <class Real>
class compensated_sum {
 public:
  compensated_sum() = default;
  explicit compensated_sum(Real init) : sum_(init) {}

  void add(const Real& x) {
    using std::abs;
    Real t = sum_ + x;
    if (abs(sum_) >= abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }

  compensated_sum& operator+=(const Real& x) {
    add(x);
    return *this;
  }

  void merge(const compensated_sum& other) {
    add(other.sum_);
    add(other.carry_);
  }

  Real value() const { return sum_ + carry_; }

 private:
  Real sum_{0};
  Real carry_{0};
};

// Splits [first, last) into fixed-size blocks and evaluates `fn(begin, end)`
// on each, spreading blocks over `workers` threads. Results come back in
// block order, so any reduction the caller performs is independent of the
// worker count.
template <class Fn>
auto run_blocks(std::uint64_t first, std::uint64_t last, std::uint64_t block, unsigned workers, Fn fn)
    -> std::vector<decltype(fn(first, last))> {
  using result_type = decltype(fn(first, last));
  if (last <= first) return {};
  if (block == 0) block = 1;
  const std::uint64_t nblocks = (last - first + block - 1) / block;
  std::vector<result_type> out(nblocks);
  auto work = [&](std::uint64_t b0, std::uint64_t stride) {
    for (std::uint64_t b = b0; b < nblocks; b += stride) {
      const std::uint64_t lo = first + b * block;
      const std::uint64_t hi = std::min(last, lo + block);
      out[b] = fn(lo, hi);
    }
  };
  if (workers <= 1 || nblocks == 1) {
    work(0, 1);
    return out;
  }
  const unsigned nthreads = static_cast<unsigned>(std::min<std::uint64_t>(workers, nblocks));
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t, nthreads);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace momzeta
