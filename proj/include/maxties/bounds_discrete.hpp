#pragma once

#include <map>
#include <string>

#include "maxties/maxima_discrete.hpp"
#include "maxties/numeric.hpp"

namespace maxties {

/// A total variation bound together with what it was computed from.
struct BoundReport {
  std::string theorem;
  double bound = 0.0;
  std::map<std::string, double> params;
  std::map<std::string, double> moments;
  double truncation_error = 0.0;
  bool informative = false;  // bound < 1

  static BoundReport make(std::string theorem, double bound, std::map<std::string, double> params,
                          std::map<std::string, double> moments, double truncation_error);
};

/// Logarithmic approximation of K_n with 1 - alpha = P(K_n = 1) / E[K_n]:
/// -2n log(1-alpha) sum_j p(j) (F(j)^(n-1) - ((1-alpha)(n-1)/alpha) p(j) F(j-1)^(n-2)).
BoundReport thm1a_bound(const KnSpec& spec, double tol = kDefaultTol);

/// For any positive integer K with alpha = P(K* > 1):
/// -2 log(1-alpha) (E[K] - (2(1-alpha)/alpha) P(K = 2)).
double general_log_bound(double mean, double p_two, double alpha);

/// Logarithmic approximation with 1 - beta = E[K_n] / E[K_n^2]. Needs n >= 4.
BoundReport thm1b_bound(const KnSpec& spec, double tol = kDefaultTol);
BoundReport thm1b_bound(const KnMoments& m);

/// -2(1+beta) log(1-beta) / beta * E[K] * d_TV(K*, Geom(1-beta)).
double lemma1_link_bound(double mean, double beta, double tv_star_geom);

/// Poisson approximation with lambda = E[(K_n)_2] / E[K_n]. Needs n >= 3.
BoundReport thm2_poisson_bound(const KnSpec& spec, double tol = kDefaultTol);
BoundReport thm2_poisson_bound(const KnMoments& m);

}  // namespace maxties
