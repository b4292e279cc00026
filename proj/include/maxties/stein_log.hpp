#pragma once

#include <cstdint>
#include <set>

#include "maxties/numeric.hpp"

namespace maxties {

/// h(k) = 1{k in E} - P(L in E) for L ~ L(alpha), with E either a finite
/// set or the complement of one.
class SteinTestFn {
 public:
  static SteinTestFn finite(double alpha, std::set<std::int64_t> elements);
  static SteinTestFn complement_of(double alpha, std::set<std::int64_t> excluded);

  double alpha() const noexcept { return alpha_; }
  bool contains(std::int64_t k) const;
  double prob_in_set() const noexcept { return prob_in_set_; }
  double operator()(std::int64_t k) const;

  /// Value of h beyond the largest listed element.
  double far_value() const noexcept { return (complement_ ? 1.0 : 0.0) - prob_in_set_; }
  std::int64_t largest_listed() const noexcept { return elements_.empty() ? 0 : *elements_.rbegin(); }

 private:
  SteinTestFn(double alpha, std::set<std::int64_t> elements, bool complement);

  double alpha_;
  std::set<std::int64_t> elements_;
  bool complement_;
  double prob_in_set_;
};

double stein_h(const SteinTestFn& t, std::int64_t k);

/// f_h(k) = (1/alpha) sum_{j>=1} h(j+k) alpha^j / (j+k), truncated once the
/// geometric remainder alpha^J / ((J+1+k)(1-alpha)) is <= tol.
///
/// At k = 0 the series equals (-log(1-alpha)/alpha) E[h(L)] = 0, so it agrees
/// with the recursion seed f_h(0) = 0.
double stein_solution(const SteinTestFn& t, std::int64_t k, double tol = 1e-13);

/// k f_h(k-1) - alpha k f_h(k) - h(k); zero up to series error.
double stein_residual(const SteinTestFn& t, std::int64_t k, double tol = 1e-13);

/// sup_h sup_k |f_h(k)| <= -log(1-alpha)/alpha.
double stein_bound_const(double alpha);

/// d_TV(Z, L) bound for Z ~ NB(ell, 1-beta), L ~ L(alpha):
/// -log(1-alpha) sqrt(beta ell) / (alpha (1-beta)) ((1-alpha) sqrt(beta ell) + |alpha - beta|).
/// With alpha = beta it reduces to -log(1-alpha) ell. The Stein operator only
/// acts on k >= 1, so the alpha = beta reduction controls the zero-truncated
/// NB; the untruncated NB has TV >= P(Z = 0).
double log_vs_negbin_bound(double alpha, double beta, double ell);

}  // namespace maxties
