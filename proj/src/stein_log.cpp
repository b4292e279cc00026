#include "maxties/stein_log.hpp"

#include <cmath>

#include "maxties/approximants.hpp"
#include "maxties/errors.hpp"

namespace maxties {

namespace {

void require_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError(std::string(who) + ": alpha must lie in (0,1)");
}

}  // namespace

SteinTestFn::SteinTestFn(double alpha, std::set<std::int64_t> elements, bool complement)
    : alpha_(alpha), elements_(std::move(elements)), complement_(complement) {
  require_alpha(alpha, "SteinTestFn");
  for (auto e : elements_) {
    if (e < 0) throw DomainError("SteinTestFn: elements must be non-negative");
  }
  CompensatedSum listed;
  for (auto e : elements_) {
    if (e >= 1) listed += logarithmic_pmf(alpha, e);
  }
  prob_in_set_ = complement_ ? 1.0 - listed.value() : listed.value();
}

SteinTestFn SteinTestFn::finite(double alpha, std::set<std::int64_t> elements) {
  return SteinTestFn(alpha, std::move(elements), false);
}

SteinTestFn SteinTestFn::complement_of(double alpha, std::set<std::int64_t> excluded) {
  return SteinTestFn(alpha, std::move(excluded), true);
}

bool SteinTestFn::contains(std::int64_t k) const { return (elements_.count(k) > 0) != complement_; }

double SteinTestFn::operator()(std::int64_t k) const { return (contains(k) ? 1.0 : 0.0) - prob_in_set_; }

double stein_h(const SteinTestFn& t, std::int64_t k) { return t(k); }

double stein_solution(const SteinTestFn& t, std::int64_t k, double tol) {
  if (k < 0) throw DomainError("stein_solution: k must be non-negative");
  if (!(tol > 0.0)) throw DomainError("stein_solution: tol must be positive");
  const double alpha = t.alpha();
  const double kd = static_cast<double>(k);
  CompensatedSum sum;
  double power = 1.0;
  for (std::int64_t j = 1; j < 100'000'000; ++j) {
    power *= alpha;
    const double jd = static_cast<double>(j);
    sum += t(j + k) * power / (jd + kd);
    // |h| <= 1: (1/alpha) sum_{i>j} alpha^i/(i+k) <= alpha^j / ((j+1+k)(1-alpha)).
    const double remainder = power / ((jd + 1.0 + kd) * (1.0 - alpha));
    if (remainder <= tol) return sum.value() / alpha;
  }
  throw TruncationError("stein_solution: series did not converge", power);
}

double stein_residual(const SteinTestFn& t, std::int64_t k, double tol) {
  if (k < 1) throw DomainError("stein_residual: k must be >= 1");
  const double kd = static_cast<double>(k);
  return kd * stein_solution(t, k - 1, tol) - t.alpha() * kd * stein_solution(t, k, tol) - t(k);
}

double stein_bound_const(double alpha) {
  require_alpha(alpha, "stein_bound_const");
  return -std::log1p(-alpha) / alpha;
}

double log_vs_negbin_bound(double alpha, double beta, double ell) {
  require_alpha(alpha, "log_vs_negbin_bound");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("log_vs_negbin_bound: beta must lie in (0,1)");
  if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("log_vs_negbin_bound: ell must be positive");
  const double root = std::sqrt(beta * ell);
  return -std::log1p(-alpha) * root / (alpha * (1.0 - beta)) * ((1.0 - alpha) * root + std::abs(alpha - beta));
}

}  // namespace maxties
