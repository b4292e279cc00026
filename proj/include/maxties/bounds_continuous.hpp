#pragma once

#include <cstdint>
#include <span>

#include "maxties/approximants.hpp"
#include "maxties/bounds_discrete.hpp"
#include "maxties/distributions.hpp"
#include "maxties/numeric.hpp"

namespace maxties {

/// W | Q ~ Bin(n - ell, Q), described by the first two moments of Q.
struct MixedBinomialSpec {
  std::int64_t n;
  std::int64_t ell;
  double mean_q;   // E[Q]
  double mean_q2;  // E[Q^2]

  MixedBinomialSpec(std::int64_t n_, std::int64_t ell_, double mean_q_, double mean_q2_);
  double mean_w() const noexcept { return static_cast<double>(n - ell) * mean_q; }
};

/// n i.i.d. draws from a continuous law; counts observations strictly within
/// distance a below the ell-th largest.
struct NearOrderSpec {
  ContinuousLaw law;
  std::int64_t n;
  std::int64_t ell;
  double a;

  NearOrderSpec(ContinuousLaw law_, std::int64_t n_, std::int64_t ell_, double a_);
};

/// Negative binomial approximation NB(ell, 1 - beta) of a mixed binomial, with
/// beta = E[W] / (E[W] + ell).
BoundReport thm4_bound(const MixedBinomialSpec& spec);

/// Density of the ell-th largest of n draws:
/// n C(n-1, ell-1) (1 - F(x))^(ell-1) F(x)^(n-ell) f(x).
double order_stat_density(const NearOrderSpec& spec, double x);

/// r_a(x) = 1 - F(x - a) / F(x), taken as 1 where F(x) = 0.
double near_fraction(const ContinuousLaw& law, double a, double x);

/// M_j = E[r_a(X_{n-ell+1:n})^j] by adaptive Gauss-Kronrod quadrature split
/// at the support-edge kink. error is the quadrature error estimate.
Certified m_j_integral_certified(const NearOrderSpec& spec, int j, double tol = 1e-10);
double m_j_integral(const NearOrderSpec& spec, int j, double tol = 1e-10);

/// Closed-form Gumbel moments for ell = 1: M_1 = (e^a - 1)/(n + e^a - 1),
/// M_2 = 2 (e^a - 1)^2 / ((n + e^a - 1)(n + 2 e^a - 2)).
double gumbel_m_closed(std::int64_t n, double a, int j);
/// General ell: M_j = sum_m (-1)^m C(j,m) prod_{i<ell} (n-i) / (n-i + m (e^a - 1)).
double gumbel_m_closed(std::int64_t n, std::int64_t ell, double a, int j);

/// Uniform(0, b) moments obtained by treating F(x - a) as (x - a)/b on the
/// whole support: M_1 = an/(b(n-ell)), M_2 = a^2 n (n-1)/(b^2 (n-ell)(n-ell-1)).
/// Accurate when a/b is small; see uniform_m_exact otherwise.
double uniform_m_closed(std::int64_t n, std::int64_t ell, double a, double b, int j);
/// Exact moments for the clamped cdf:
/// closed_j P(Bin(n-j, a/b) <= n-ell-j) + P(Bin(n, a/b) >= n-ell+1), and 1 once a >= b.
double uniform_m_exact(std::int64_t n, std::int64_t ell, double a, double b, int j);

/// thm4_bound applied to the mixed binomial representation of the near-order
/// count with Q = r_a(X_{n-ell+1:n}), using quadrature for M_1, M_2.
BoundReport thm3_bound(const NearOrderSpec& spec, double tol = 1e-10);

/// Gumbel, ell = 1 closed form:
/// (n-1)(e^a-1)^2 / (e^a (n+e^a-1)) * (1 + (n-2)/(n+2e^a-2)).
double gumbel_eq6_bound(std::int64_t n, double a);

/// Exact law of W ~ MBin(trials, Q) for Q on finitely many atoms.
TruncatedPMF mixed_binomial_pmf(std::int64_t trials, std::span<const double> q_values,
                                std::span<const double> q_weights);

/// Law of the near-order count, P(W = k) = int Bin(n-ell, r_a(x)).pmf(k) f_ell(x) dx,
/// on {0, ..., n - ell}. tail_mass_bound carries the summed quadrature errors.
TruncatedPMF near_order_count_pmf(const NearOrderSpec& spec, double tol = 1e-10);

}  // namespace maxties
