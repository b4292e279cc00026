#include "maxties/approximants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maxties/errors.hpp"

namespace maxties {

namespace {

void require_unit_open(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError(std::string(what) + " must lie in (0,1)");
}

double log_negbin_pmf(double ell, double beta, std::int64_t k) {
  const double kd = static_cast<double>(k);
  return std::lgamma(ell + kd) - std::lgamma(ell) - std::lgamma(kd + 1.0) + ell * std::log1p(-beta) +
         scaled_log(std::log(beta), kd);
}

// Rounding slack added to every tail budget built from computed entries.
double rounding_slack(std::size_t entries) { return 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + entries); }

}  // namespace

double TruncatedPMF::at(std::int64_t k) const noexcept {
  if (k < k_min || k > k_max()) return 0.0;
  return probs[static_cast<std::size_t>(k - k_min)];
}

double TruncatedPMF::listed_mass() const noexcept {
  CompensatedSum s;
  for (double p : probs) s += p;
  return s.value();
}

double logarithmic_pmf(double alpha, std::int64_t k) {
  require_unit_open(alpha, "logarithmic_pmf: alpha");
  if (k < 1) return 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(kd * std::log(alpha) - std::log(kd) - std::log(-std::log1p(-alpha)));
}

double logarithmic_mean(double alpha) {
  require_unit_open(alpha, "logarithmic_mean: alpha");
  return -alpha / ((1.0 - alpha) * std::log1p(-alpha));
}

double poisson_pmf(double lambda, std::int64_t k) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("poisson_pmf: lambda must be positive");
  if (k < 0) return 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(-lambda + scaled_log(std::log(lambda), kd) - std::lgamma(kd + 1.0));
}

double negbin_pmf(double ell, double beta, std::int64_t k) {
  if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("negbin_pmf: ell must be positive");
  require_unit_open(beta, "negbin_pmf: beta");
  if (k < 0) return 0.0;
  return std::exp(log_negbin_pmf(ell, beta, k));
}

TruncatedPMF truncate_law(const std::function<double(std::int64_t)>& pmf,
                          const std::function<double(std::int64_t)>& tail_after, std::int64_t k_min,
                          double tol, std::int64_t max_terms) {
  if (!(tol > 0.0)) throw DomainError("truncate_law: tol must be positive");
  TruncatedPMF out;
  out.k_min = k_min;
  double best = 1.0;
  for (std::int64_t k = k_min; k - k_min < max_terms; ++k) {
    out.probs.push_back(pmf(k));
    const double tail = tail_after(k);
    best = std::min(best, tail);
    if (tail <= tol) {
      out.tail_mass_bound = std::max(0.0, tail) + rounding_slack(out.probs.size());
      return out;
    }
  }
  throw TruncationError("truncate_law: tail certificate did not reach tol", best);
}

TruncatedPMF logarithmic_law(double alpha, double tol) {
  require_unit_open(alpha, "logarithmic_law: alpha");
  const double neg_log = -std::log1p(-alpha);
  // P(L > K) <= alpha^(K+1) / ((K+1) (1-alpha) (-log(1-alpha))).
  auto tail = [alpha, neg_log](std::int64_t k) {
    const double kd = static_cast<double>(k);
    return std::exp((kd + 1.0) * std::log(alpha) - std::log(kd + 1.0) - std::log1p(-alpha) - std::log(neg_log));
  };
  return truncate_law([alpha](std::int64_t k) { return logarithmic_pmf(alpha, k); }, tail, 1, tol);
}

TruncatedPMF poisson_law(double lambda, double tol) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("poisson_law: lambda must be positive");
  // Ratio test: for K + 2 > lambda, P(Y > K) <= P(Y = K+1) / (1 - lambda/(K+2)).
  auto tail = [lambda](std::int64_t k) {
    const double next = static_cast<double>(k + 2);
    if (next <= lambda) return 1.0;
    return poisson_pmf(lambda, k + 1) / (1.0 - lambda / next);
  };
  return truncate_law([lambda](std::int64_t k) { return poisson_pmf(lambda, k); }, tail, 0, tol);
}

TruncatedPMF negbin_law(double ell, double beta, double tol) {
  if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("negbin_law: ell must be positive");
  require_unit_open(beta, "negbin_law: beta");
  // P(k+1)/P(k) = beta (ell + k)/(k + 1) is monotone in k and tends to beta,
  // so for k > K it is at most max(beta, beta (ell + K + 1)/(K + 2)).
  auto tail = [ell, beta](std::int64_t k) {
    const double kd = static_cast<double>(k);
    const double ratio = std::max(beta, beta * (ell + kd + 1.0) / (kd + 2.0));
    if (ratio >= 1.0) return 1.0;
    return negbin_pmf(ell, beta, k + 1) / (1.0 - ratio);
  };
  return truncate_law([ell, beta](std::int64_t k) { return negbin_pmf(ell, beta, k); }, tail, 0, tol);
}

TruncatedPMF zero_truncated_negbin_law(double ell, double beta, double tol) {
  TruncatedPMF base = negbin_law(ell, beta, tol * (1.0 - std::pow(1.0 - beta, ell)));
  const double positive_mass = -std::expm1(ell * std::log1p(-beta));
  TruncatedPMF out;
  out.k_min = 1;
  out.probs.reserve(base.probs.size());
  for (std::size_t i = 1; i < base.probs.size(); ++i) out.probs.push_back(base.probs[i] / positive_mass);
  out.tail_mass_bound = base.tail_mass_bound / positive_mass + rounding_slack(out.probs.size());
  return out;
}

TruncatedPMF geometric_law(double p, double tol) {
  require_unit_open(p, "geometric_law: p");
  const double log_q = std::log1p(-p);
  return truncate_law([p, log_q](std::int64_t k) { return p * std::exp(static_cast<double>(k - 1) * log_q); },
                      [log_q](std::int64_t k) { return std::exp(static_cast<double>(k) * log_q); }, 1, tol);
}

TvInterval tv_distance(const TruncatedPMF& p, const TruncatedPMF& q) {
  const std::int64_t lo = std::min(p.k_min, q.k_min);
  const std::int64_t hi = std::max(p.k_max(), q.k_max());
  CompensatedSum l1;
  for (std::int64_t k = lo; k <= hi; ++k) l1 += std::abs(p.at(k) - q.at(k));
  TvInterval out;
  out.lo = std::min(1.0, 0.5 * l1.value());
  out.hi = std::min(1.0, out.lo + 0.5 * (p.tail_mass_bound + q.tail_mass_bound));
  return out;
}

}  // namespace maxties
