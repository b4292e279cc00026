#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>

namespace maxties {

/// A probability law on {1, 2, ...} with a certified geometric tail.
///
/// The cdf is a first-class member rather than a running sum of the pmf, so
/// closed forms stay exact. Every infinite series in the library truncates
/// using tail_bound(j) >= P(X > j), which is min(1, C r^j) for the declared
/// tail constant C and ratio r (or a law-specific certificate when one is
/// supplied), and exactly 0 beyond a finite support.
///
/// Immutable; copies share the underlying definition.
class DiscreteLaw {
 public:
  struct Definition {
    std::function<double(std::int64_t)> pmf;
    std::function<double(std::int64_t)> cdf;
    /// Optional; default to log(pmf) / log(cdf).
    std::function<double(std::int64_t)> log_pmf;
    std::function<double(std::int64_t)> log_cdf;
    /// Optional; default is a bracketing search on cdf.
    std::function<std::int64_t(double)> quantile;
    /// Optional certified log P(X > j); overrides the C r^j certificate.
    std::function<double(std::int64_t)> log_tail;
    double tail_ratio = 0.5;
    double tail_constant = 1.0;
    std::optional<std::int64_t> support_max;
    std::string name = "custom";
  };

  explicit DiscreteLaw(Definition def);

  double pmf(std::int64_t j) const;
  double cdf(std::int64_t j) const;
  double log_pmf(std::int64_t j) const;
  double log_cdf(std::int64_t j) const;

  /// Certified upper bound on P(X > j).
  double tail_bound(std::int64_t j) const;
  double log_tail_bound(std::int64_t j) const;

  /// Smallest j >= 1 with cdf(j) >= u, for u in (0, 1).
  std::int64_t quantile(double u) const;

  double tail_ratio() const noexcept { return def_->tail_ratio; }
  double tail_constant() const noexcept { return def_->tail_constant; }
  std::optional<std::int64_t> support_max() const noexcept { return def_->support_max; }
  const std::string& name() const noexcept { return def_->name; }

 private:
  std::shared_ptr<const Definition> def_;
};

/// An absolutely continuous law on an interval of the reals.
///
/// cdf is extended to all of R by clamping (0 below the support, 1 above),
/// since F(x - a) is routinely evaluated below the support.
class ContinuousLaw {
 public:
  struct Definition {
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    std::function<double(double)> quantile;
    /// Optional accurate variants; default to log(pdf), log(cdf), log1p(-cdf).
    std::function<double(double)> log_pdf;
    std::function<double(double)> log_cdf;
    std::function<double(double)> log_survival;
    double support_lo = -std::numeric_limits<double>::infinity();
    double support_hi = std::numeric_limits<double>::infinity();
    std::string name = "custom";
  };

  explicit ContinuousLaw(Definition def);

  double pdf(double x) const;
  double cdf(double x) const;
  double log_pdf(double x) const;
  double log_cdf(double x) const;
  double log_survival(double x) const;
  double quantile(double u) const;

  double support_lo() const noexcept { return def_->support_lo; }
  double support_hi() const noexcept { return def_->support_hi; }
  const std::string& name() const noexcept { return def_->name; }

 private:
  std::shared_ptr<const Definition> def_;
};

/// Geometric law P(X = j) = p (1-p)^(j-1) on {1, 2, ...}.
DiscreteLaw make_geometric(double p);

/// Geometric law parameterised by its failure probability q = 1 - p.
/// Use this when p is within rounding of 1 (e.g. p = 1 - mu/n with n = 1e9):
/// q is then held exactly instead of being recovered as 1 - p.
DiscreteLaw make_geometric_complement(double q);

/// Law with P(X = j) = weights[j-1] on {1, ..., m}.
DiscreteLaw make_tabulated(std::span<const double> weights);

/// Standard Gumbel: F(x) = exp(-e^{-x}), f(x) = exp(-x - e^{-x}).
ContinuousLaw make_gumbel();

/// Uniform on (0, b).
ContinuousLaw make_uniform(double b);

}  // namespace maxties
