#pragma once

#include <cstdint>

#include "maxties/approximants.hpp"
#include "maxties/distributions.hpp"
#include "maxties/numeric.hpp"

namespace maxties {

/// n i.i.d. draws from a law on {1, 2, ...}; K_n counts how many equal the maximum.
struct KnSpec {
  DiscreteLaw law;
  std::int64_t n;

  KnSpec(DiscreteLaw law_, std::int64_t n_);
};

/// P(K_n = k) = C(n,k) sum_j p(j)^k F(j-1)^(n-k), within tol of the exact value
/// (the truncated series never exceeds it).
double kn_pmf(const KnSpec& spec, std::int64_t k, double tol = kDefaultTol);
Certified kn_pmf_certified(const KnSpec& spec, std::int64_t k, double tol = kDefaultTol);

/// E[(K_n)_ell] = (n)_ell sum_j p(j)^ell F(j)^(n-ell).
double kn_factorial_moment(const KnSpec& spec, std::int64_t ell, double tol = kDefaultTol);
Certified kn_factorial_moment_certified(const KnSpec& spec, std::int64_t ell, double tol = kDefaultTol);

/// P(K_n = k) for k = 1..k_max, where k_max is the first k at which the
/// remaining mass (including truncation shortfall of the entries) is <= tol.
TruncatedPMF kn_full_pmf(const KnSpec& spec, double tol = kDefaultTol);

/// Size-biased law: P(K* = k) = k P(K_n = k) / E[K_n].
double kn_star_pmf(const KnSpec& spec, std::int64_t k, double tol = kDefaultTol);
TruncatedPMF kn_star_full_pmf(const KnSpec& spec, double tol = kDefaultTol);

/// Law of the value M at which the size-biased construction places the
/// maximum: P(M = m) proportional to p(m) F(m)^(n-1).
DiscreteLaw m_law(const KnSpec& spec, double tol = kDefaultTol);

/// q(m) = p(m) / F(m).
double q_of_m(const DiscreteLaw& law, std::int64_t m);

/// E[q(M)^j] for j in {1, 2}, summed directly over the law of M.
double q_moment(const KnSpec& spec, int j, double tol = kDefaultTol);

/// Everything the discrete bounds need, computed once per spec.
struct KnMoments {
  std::int64_t n = 0;
  double mean = 0.0;       // E[K_n]
  double factorial2 = 0.0; // E[(K_n)_2], 0 when n < 2
  double factorial3 = 0.0; // E[(K_n)_3], 0 when n < 3
  double p_one = 0.0;      // P(K_n = 1)
  double p_two = 0.0;      // P(K_n = 2), 0 when n < 2
  double truncation_error = 0.0;

  double second_moment() const noexcept { return factorial2 + mean; }
};

KnMoments kn_moments(const KnSpec& spec, double tol = kDefaultTol);

}  // namespace maxties
