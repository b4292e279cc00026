#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace maxties {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// A value together with a proven bound on its absolute error.
struct Certified {
  double value = 0.0;
  double error = 0.0;
};

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
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

/// exponent * log_base with the convention 0 * log(0) = 0, so that 0^0 = 1.
inline double scaled_log(double log_base, double exponent) noexcept {
  return exponent == 0.0 ? 0.0 : exponent * log_base;
}

/// log C(n, k). Exact log-sum over min(k, n-k) factors while that is small,
/// which avoids the cancellation of lgamma differences at n ~ 1e9.
double log_binomial(std::int64_t n, std::int64_t k);

/// log of the falling factorial (n)_k = n (n-1) ... (n-k+1); -inf if k > n.
double log_falling_factorial(std::int64_t n, std::int64_t k);

/// (n)_k in plain arithmetic (may overflow to inf for large k).
double falling_factorial(double n, std::int64_t k);

/// Binomial(trials, prob) pmf at k, evaluated in log space.
double binomial_pmf(std::int64_t trials, double prob, std::int64_t k);

}  // namespace maxties
