#include "maxties/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "maxties/errors.hpp"
#include "maxties/numeric.hpp"

namespace maxties {

DiscreteLaw::DiscreteLaw(Definition def) {
  if (!def.pmf || !def.cdf) throw DomainError("DiscreteLaw: pmf and cdf are required");
  if (!(def.tail_ratio > 0.0 && def.tail_ratio < 1.0)) {
    throw DomainError("DiscreteLaw: tail_ratio must lie in (0,1)");
  }
  if (!(def.tail_constant > 0.0) || !std::isfinite(def.tail_constant)) {
    throw DomainError("DiscreteLaw: tail_constant must be positive and finite");
  }
  if (def.support_max && *def.support_max < 1) {
    throw DomainError("DiscreteLaw: support_max must be >= 1");
  }
  def_ = std::make_shared<const Definition>(std::move(def));
}

double DiscreteLaw::pmf(std::int64_t j) const {
  if (j < 1) return 0.0;
  if (def_->support_max && j > *def_->support_max) return 0.0;
  return def_->pmf(j);
}

double DiscreteLaw::cdf(std::int64_t j) const {
  if (j < 1) return 0.0;
  if (def_->support_max && j >= *def_->support_max) return 1.0;
  return def_->cdf(j);
}

double DiscreteLaw::log_pmf(std::int64_t j) const {
  if (j < 1) return kNegInf;
  if (def_->support_max && j > *def_->support_max) return kNegInf;
  return def_->log_pmf ? def_->log_pmf(j) : std::log(def_->pmf(j));
}

double DiscreteLaw::log_cdf(std::int64_t j) const {
  if (j < 1) return kNegInf;
  if (def_->support_max && j >= *def_->support_max) return 0.0;
  return def_->log_cdf ? def_->log_cdf(j) : std::log(def_->cdf(j));
}

double DiscreteLaw::log_tail_bound(std::int64_t j) const {
  if (j < 1) return 0.0;
  if (def_->support_max && j >= *def_->support_max) return kNegInf;
  if (def_->log_tail) return std::min(0.0, def_->log_tail(j));
  const double lb = std::log(def_->tail_constant) + static_cast<double>(j) * std::log(def_->tail_ratio);
  return std::min(0.0, lb);
}

double DiscreteLaw::tail_bound(std::int64_t j) const { return std::exp(log_tail_bound(j)); }

std::int64_t DiscreteLaw::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("DiscreteLaw::quantile: u must lie in (0,1)");
  if (def_->quantile) return def_->quantile(u);
  // Bracket [lo, hi] with cdf(lo) < u <= cdf(hi), then bisect.
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (cdf(hi) < u) {
    lo = hi;
    if (hi > (std::int64_t{1} << 61)) throw NumericalError("DiscreteLaw::quantile: cdf never reaches u", u);
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (cdf(mid) >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

ContinuousLaw::ContinuousLaw(Definition def) {
  if (!def.pdf || !def.cdf || !def.quantile) {
    throw DomainError("ContinuousLaw: pdf, cdf and quantile are required");
  }
  if (!(def.support_lo < def.support_hi)) throw DomainError("ContinuousLaw: empty support");
  def_ = std::make_shared<const Definition>(std::move(def));
}

double ContinuousLaw::pdf(double x) const {
  if (x < def_->support_lo || x > def_->support_hi) return 0.0;
  return def_->pdf(x);
}

double ContinuousLaw::cdf(double x) const {
  if (x <= def_->support_lo) return 0.0;
  if (x >= def_->support_hi) return 1.0;
  return std::clamp(def_->cdf(x), 0.0, 1.0);
}

double ContinuousLaw::log_pdf(double x) const {
  if (x < def_->support_lo || x > def_->support_hi) return kNegInf;
  return def_->log_pdf ? def_->log_pdf(x) : std::log(def_->pdf(x));
}

double ContinuousLaw::log_cdf(double x) const {
  if (x <= def_->support_lo) return kNegInf;
  if (x >= def_->support_hi) return 0.0;
  return def_->log_cdf ? def_->log_cdf(x) : std::log(cdf(x));
}

double ContinuousLaw::log_survival(double x) const {
  if (x <= def_->support_lo) return 0.0;
  if (x >= def_->support_hi) return kNegInf;
  return def_->log_survival ? def_->log_survival(x) : std::log1p(-cdf(x));
}

double ContinuousLaw::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("ContinuousLaw::quantile: u must lie in (0,1)");
  return def_->quantile(u);
}

DiscreteLaw make_geometric(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("make_geometric: p must lie in (0,1)");
  return make_geometric_complement(1.0 - p);
}

DiscreteLaw make_geometric_complement(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("make_geometric_complement: q must lie in (0,1)");
  const double log_q = std::log(q);
  const double log_p = std::log1p(-q);
  const double p = -std::expm1(log_q);
  DiscreteLaw::Definition def;
  def.pmf = [p, log_q](std::int64_t j) { return p * std::exp(static_cast<double>(j - 1) * log_q); };
  def.cdf = [log_q](std::int64_t j) { return -std::expm1(static_cast<double>(j) * log_q); };
  def.log_pmf = [log_p, log_q](std::int64_t j) { return log_p + static_cast<double>(j - 1) * log_q; };
  def.log_cdf = [log_q](std::int64_t j) { return std::log1p(-std::exp(static_cast<double>(j) * log_q)); };
  def.quantile = [log_q](double u) {
    // cdf(j) >= u  <=>  j >= log(1-u) / log(q); fix up rounding at the boundary.
    const double guess = std::ceil(std::log1p(-u) / log_q);
    auto j = static_cast<std::int64_t>(std::max(1.0, guess));
    auto cdf = [log_q](std::int64_t k) { return -std::expm1(static_cast<double>(k) * log_q); };
    while (cdf(j) < u) ++j;
    while (j > 1 && cdf(j - 1) >= u) --j;
    return j;
  };
  def.tail_ratio = q;
  def.tail_constant = 1.0;
  def.name = "geometric";
  return DiscreteLaw(std::move(def));
}

DiscreteLaw make_tabulated(std::span<const double> weights) {
  if (weights.empty()) throw DomainError("make_tabulated: weights must be non-empty");
  CompensatedSum total;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("make_tabulated: weights must be non-negative");
    total += w;
  }
  const double sum = total.value();
  if (std::abs(sum - 1.0) > 1e-12) throw DomainError("make_tabulated: weights must sum to 1");

  auto table = std::make_shared<std::vector<double>>(weights.begin(), weights.end());
  for (double& w : *table) w /= sum;
  auto prefix = std::make_shared<std::vector<double>>(table->size() + 1, 0.0);
  CompensatedSum running;
  for (std::size_t i = 0; i < table->size(); ++i) {
    running += (*table)[i];
    (*prefix)[i + 1] = std::min(1.0, running.value());
  }
  prefix->back() = 1.0;
  auto suffix = std::make_shared<std::vector<double>>(table->size() + 1, 0.0);
  CompensatedSum remaining;
  for (std::size_t i = table->size(); i-- > 0;) {
    remaining += (*table)[i];
    (*suffix)[i] = remaining.value();
  }

  const auto m = static_cast<std::int64_t>(table->size());
  DiscreteLaw::Definition def;
  def.pmf = [table](std::int64_t j) { return (*table)[static_cast<std::size_t>(j - 1)]; };
  def.cdf = [prefix](std::int64_t j) { return (*prefix)[static_cast<std::size_t>(j)]; };
  def.quantile = [prefix, m](double u) {
    auto it = std::lower_bound(prefix->begin() + 1, prefix->end(), u);
    return std::min<std::int64_t>(m, it - prefix->begin());
  };
  // Exact suffix sums, padded for rounding. The declared (C, r) = (2^m, 1/2)
  // also dominates the tail but is far looser.
  def.log_tail = [suffix](std::int64_t j) {
    return std::log((*suffix)[static_cast<std::size_t>(j)] * (1.0 + 1e-14));
  };
  def.tail_ratio = 0.5;
  def.tail_constant = std::ldexp(1.0, static_cast<int>(std::min<std::int64_t>(m, 1000)));
  def.support_max = m;
  def.name = "tabulated";
  return DiscreteLaw(std::move(def));
}

ContinuousLaw make_gumbel() {
  ContinuousLaw::Definition def;
  def.pdf = [](double x) { return std::exp(-x - std::exp(-x)); };
  def.cdf = [](double x) { return std::exp(-std::exp(-x)); };
  def.log_pdf = [](double x) { return -x - std::exp(-x); };
  def.log_cdf = [](double x) { return -std::exp(-x); };
  def.log_survival = [](double x) { return std::log(-std::expm1(-std::exp(-x))); };
  def.quantile = [](double u) { return -std::log(-std::log(u)); };
  def.name = "gumbel";
  return ContinuousLaw(std::move(def));
}

ContinuousLaw make_uniform(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("make_uniform: b must be positive");
  ContinuousLaw::Definition def;
  def.pdf = [b](double) { return 1.0 / b; };
  def.cdf = [b](double x) { return x / b; };
  def.log_survival = [b](double x) { return std::log1p(-x / b); };
  def.quantile = [b](double u) { return u * b; };
  def.support_lo = 0.0;
  def.support_hi = b;
  def.name = "uniform";
  return ContinuousLaw(std::move(def));
}

}  // namespace maxties
