#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "maxties/numeric.hpp"

namespace maxties {

/// A finite run of probabilities P(k) for k = k_min, ..., k_min + size - 1,
/// plus a certified bound on everything the run leaves out.
///
/// tail_mass_bound covers the mass beyond the run *and* any shortfall of the
/// listed entries themselves, so half-L1 on the listed entries plus half the
/// two budgets is a rigorous upper end for the total variation distance.
struct TruncatedPMF {
  std::int64_t k_min = 0;
  std::vector<double> probs;
  double tail_mass_bound = 0.0;

  std::int64_t k_max() const noexcept { return k_min + static_cast<std::int64_t>(probs.size()) - 1; }
  /// P(k), zero outside the listed run.
  double at(std::int64_t k) const noexcept;
  double listed_mass() const noexcept;
};

/// Certified total variation distance: lo is half-L1 over the listed entries,
/// hi adds half of each tail budget (capped at 1).
struct TvInterval {
  double lo = 0.0;
  double hi = 0.0;
};

double logarithmic_pmf(double alpha, std::int64_t k);
double logarithmic_mean(double alpha);
double poisson_pmf(double lambda, std::int64_t k);
/// NB(ell, 1 - beta): Gamma(ell + k) / (Gamma(ell) k!) (1 - beta)^ell beta^k on {0, 1, ...}.
double negbin_pmf(double ell, double beta, std::int64_t k);

/// Lists pmf(k_min), pmf(k_min + 1), ... until tail_after(K), a certified bound
/// on the mass of {k > K}, drops to tol. Throws TruncationError (carrying the
/// best bound reached) if that takes more than max_terms entries.
TruncatedPMF truncate_law(const std::function<double(std::int64_t)>& pmf,
                          const std::function<double(std::int64_t)>& tail_after, std::int64_t k_min,
                          double tol, std::int64_t max_terms = 10'000'000);

TruncatedPMF logarithmic_law(double alpha, double tol = kDefaultTol);
TruncatedPMF poisson_law(double lambda, double tol = kDefaultTol);
TruncatedPMF negbin_law(double ell, double beta, double tol = kDefaultTol);
/// NB(ell, 1 - beta) conditioned on being >= 1.
TruncatedPMF zero_truncated_negbin_law(double ell, double beta, double tol = kDefaultTol);
/// Geometric on {1, 2, ...} with success probability p.
TruncatedPMF geometric_law(double p, double tol = kDefaultTol);

TvInterval tv_distance(const TruncatedPMF& p, const TruncatedPMF& q);

}  // namespace maxties
