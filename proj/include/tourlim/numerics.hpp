#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tourlim {

/// Neumaier's variant of Kahan summation. Accumulation order is the call
/// order, so results are reproducible for a fixed traversal.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Correctly rounded sum of `xs` (Shewchuk expansion, as in Python's fsum).
/// Two inputs whose exact real sums agree always produce the same double.
double exact_sum(std::span<const double> xs);

/// Binomial coefficient C(n, k) as an exact integer (n <= 62).
std::int64_t binomial(int n, int k);

/// n * (n-1) * ... * (n-k+1) as a double; zero when k > n.
double falling_factorial(std::int64_t n, int k);

}  // namespace tourlim
