#include "maxties/bounds_discrete.hpp"

#include <cmath>

#include "maxties/errors.hpp"

namespace maxties {

namespace {

void require_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DegenerateParameterError(std::string(what) + " = " + std::to_string(x) + " lies outside (0,1)");
  }
}

std::map<std::string, double> moment_map(const KnMoments& m) {
  std::map<std::string, double> out{{"E[K]", m.mean}, {"P(K=1)", m.p_one}};
  if (m.n >= 2) {
    out["E[(K)_2]"] = m.factorial2;
    out["P(K=2)"] = m.p_two;
  }
  if (m.n >= 3) out["E[(K)_3]"] = m.factorial3;
  return out;
}

}  // namespace

BoundReport BoundReport::make(std::string theorem, double bound, std::map<std::string, double> params,
                              std::map<std::string, double> moments, double truncation_error) {
  if (!(bound >= 0.0)) throw NumericalError(theorem + ": bound evaluated to a negative or NaN value", bound);
  BoundReport r;
  r.theorem = std::move(theorem);
  r.bound = bound;
  r.params = std::move(params);
  r.moments = std::move(moments);
  r.truncation_error = truncation_error;
  r.informative = bound < 1.0;
  return r;
}

BoundReport thm1a_bound(const KnSpec& spec, double tol) {
  if (spec.n < 2) throw DegenerateParameterError("thm1a: n = 1 gives K_n = 1 and alpha = 0");
  const Certified mean = kn_factorial_moment_certified(spec, 1, tol);
  const Certified p_one = kn_pmf_certified(spec, 1, tol);
  const double alpha = 1.0 - p_one.value / mean.value;
  require_open_unit(alpha, "thm1a: alpha");

  const auto& law = spec.law;
  const double n1 = static_cast<double>(spec.n - 1);
  const double n2 = static_cast<double>(spec.n - 2);
  const double coef = (1.0 - alpha) * n1 / alpha;
  // sum_j p(j) F(j)^(n-1) - coef sum_j p(j)^2 F(j-1)^(n-2), each certified.
  CompensatedSum first;
  CompensatedSum second;
  double remainder = 0.0;
  const auto last = law.support_max();
  const double log_tol = std::log(tol);
  for (std::int64_t j = 1;; ++j) {
    const double lp = law.log_pmf(j);
    if (lp > kNegInf) {
      first += std::exp(lp + scaled_log(law.log_cdf(j), n1));
      second += std::exp(2.0 * lp + scaled_log(law.log_cdf(j - 1), n2));
    }
    if (last && j >= *last) break;
    const double lt = law.log_tail_bound(j);
    if (lt + std::log(1.0 + coef) <= log_tol) {
      remainder = std::exp(lt) * (1.0 + coef);
      break;
    }
    if (j > 100'000'000) throw TruncationError("thm1a: series did not converge", std::exp(lt));
  }
  const double nd = static_cast<double>(spec.n);
  const double scale = -2.0 * nd * std::log1p(-alpha);
  const double bound = scale * (first.value() - coef * second.value());

  return BoundReport::make("thm1a", bound, {{"alpha", alpha}}, {{"E[K]", mean.value}, {"P(K=1)", p_one.value}},
                           mean.error + p_one.error + scale * remainder);
}

double general_log_bound(double mean, double p_two, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("general_log_bound: alpha must lie in (0,1)");
  if (!(mean > 0.0)) throw DomainError("general_log_bound: E[K] must be positive");
  if (!(p_two >= 0.0 && p_two <= 1.0)) throw DomainError("general_log_bound: P(K=2) must be a probability");
  return -2.0 * std::log1p(-alpha) * (mean - 2.0 * (1.0 - alpha) / alpha * p_two);
}

BoundReport thm1b_bound(const KnSpec& spec, double tol) {
  if (spec.n < 4) throw DomainError("thm1b: needs n >= 4");
  return thm1b_bound(kn_moments(spec, tol));
}

BoundReport thm1b_bound(const KnMoments& m) {
  if (m.n < 4) throw DomainError("thm1b: needs n >= 4");
  const double second = m.second_moment();
  const double beta = 1.0 - m.mean / second;
  require_open_unit(beta, "thm1b: beta");
  if (!(m.factorial2 > 0.0)) throw DegenerateParameterError("thm1b: E[(K)_2] = 0");
  const double n = static_cast<double>(m.n);
  const double bracket = m.factorial3 / m.factorial2 - (n - 3.0) * m.factorial2 / ((n - 1.0) * m.mean);
  const double bound =
      -2.0 * (1.0 + beta) * std::log1p(-beta) * second * (beta + (1.0 - beta) * bracket);
  return BoundReport::make("thm1b", bound, {{"beta", beta}}, moment_map(m), m.truncation_error);
}

double lemma1_link_bound(double mean, double beta, double tv_star_geom) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("lemma1_link_bound: beta must lie in (0,1)");
  if (!(mean > 0.0)) throw DomainError("lemma1_link_bound: E[K] must be positive");
  if (!(tv_star_geom >= 0.0 && tv_star_geom <= 1.0)) throw DomainError("lemma1_link_bound: tv must lie in [0,1]");
  return -2.0 * (1.0 + beta) * std::log1p(-beta) / beta * mean * tv_star_geom;
}

BoundReport thm2_poisson_bound(const KnSpec& spec, double tol) {
  if (spec.n < 3) throw DomainError("thm2: needs n >= 3");
  return thm2_poisson_bound(kn_moments(spec, tol));
}

BoundReport thm2_poisson_bound(const KnMoments& m) {
  if (m.n < 3) throw DomainError("thm2: needs n >= 3");
  if (!(m.factorial2 > 0.0)) throw DegenerateParameterError("thm2: E[(K)_2] = 0 gives lambda = 0");
  const double n = static_cast<double>(m.n);
  const double lambda = m.factorial2 / m.mean;
  double variance = m.factorial2 - m.mean * (m.mean - 1.0);
  // Var(K_n) is non-negative; allow only rounding-size negatives.
  const double slack = 1e-12 * std::max(1.0, m.factorial2) + m.truncation_error;
  if (variance < -slack) throw NumericalError("thm2: negative variance", variance);
  variance = std::max(0.0, variance);
  const double bound = std::sqrt(variance) / (2.0 * m.mean) + std::sqrt(m.mean / (4.0 * m.factorial2)) +
                       (n - 1.0) * m.factorial3 / ((n - 2.0) * m.factorial2) -
                       (n - 2.0) * m.factorial2 / ((n - 1.0) * m.mean);
  return BoundReport::make("thm2", bound, {{"lambda", lambda}}, moment_map(m), m.truncation_error);
}

}  // namespace maxties
