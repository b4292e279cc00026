#include "maxties/numeric.hpp"

#include <algorithm>

#include "maxties/errors.hpp"

namespace maxties {

namespace {
constexpr std::int64_t kExactLogSumLimit = 200000;
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("log_binomial: n must be non-negative");
  if (k < 0 || k > n) return kNegInf;
  const std::int64_t m = std::min(k, n - k);
  if (m == 0) return 0.0;
  if (m <= kExactLogSumLimit) {
    CompensatedSum s;
    for (std::int64_t i = 0; i < m; ++i) {
      s += std::log(static_cast<double>(n - i)) - std::log(static_cast<double>(m - i));
    }
    return s.value();
  }
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log_falling_factorial(std::int64_t n, std::int64_t k) {
  if (k < 0) throw DomainError("log_falling_factorial: k must be non-negative");
  if (k > n) return kNegInf;
  if (k <= kExactLogSumLimit) {
    CompensatedSum s;
    for (std::int64_t i = 0; i < k; ++i) s += std::log(static_cast<double>(n - i));
    return s.value();
  }
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(n - k) + 1.0);
}

double falling_factorial(double n, std::int64_t k) {
  double r = 1.0;
  for (std::int64_t i = 0; i < k; ++i) r *= (n - static_cast<double>(i));
  return r;
}

double binomial_pmf(std::int64_t trials, double prob, std::int64_t k) {
  if (trials < 0 || !(prob >= 0.0 && prob <= 1.0)) {
    throw DomainError("binomial_pmf: need trials >= 0 and prob in [0,1]");
  }
  if (k < 0 || k > trials) return 0.0;
  if (prob == 0.0) return k == 0 ? 1.0 : 0.0;
  if (prob == 1.0) return k == trials ? 1.0 : 0.0;
  const double lp = log_binomial(trials, k) + static_cast<double>(k) * std::log(prob) +
                    static_cast<double>(trials - k) * std::log1p(-prob);
  return std::exp(lp);
}

}  // namespace maxties
