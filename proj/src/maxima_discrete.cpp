#include "maxties/maxima_discrete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "maxties/errors.hpp"

namespace maxties {

namespace {

constexpr std::int64_t kMaxSeriesTerms = 100'000'000;
// Padding for the floating-point evaluation of log-space terms.
constexpr double kLogSpaceSlack = 1e-13;

/// Sums exp(log_term(j)) over j = 1, 2, ... and stops at the first J whose
/// certified remainder exp(log_remainder(J)) is <= tol (or at the end of a
/// finite support). Terms are non-negative, so the partial sum is a lower bound.
template <class LogTerm, class LogRemainder>
Certified certified_series(const DiscreteLaw& law, LogTerm log_term, LogRemainder log_remainder, double tol,
                           const char* who) {
  if (!(tol > 0.0)) throw DomainError(std::string(who) + ": tol must be positive");
  const double log_tol = std::log(tol);
  const auto last = law.support_max();
  CompensatedSum sum;
  double remainder = std::numeric_limits<double>::infinity();
  for (std::int64_t j = 1; j <= kMaxSeriesTerms; ++j) {
    const double lt = log_term(j);
    if (lt > kNegInf) sum += std::exp(lt);
    if (last && j >= *last) return {sum.value(), 0.0};
    const double lr = log_remainder(j);
    remainder = std::exp(lr);
    if (lr <= log_tol) return {sum.value(), remainder};
  }
  throw TruncationError(std::string(who) + ": series remainder did not reach tol", remainder);
}

void require_k_in_range(const KnSpec& spec, std::int64_t k, const char* who) {
  if (k < 1 || k > spec.n) {
    throw DomainError(std::string(who) + ": index must lie in [1, n]");
  }
}

}  // namespace

KnSpec::KnSpec(DiscreteLaw law_, std::int64_t n_) : law(std::move(law_)), n(n_) {
  if (n < 1) throw DomainError("KnSpec: n must be >= 1");
}

Certified kn_pmf_certified(const KnSpec& spec, std::int64_t k, double tol) {
  require_k_in_range(spec, k, "kn_pmf");
  const auto& law = spec.law;
  const double log_c = log_binomial(spec.n, k);
  const double kd = static_cast<double>(k);
  const double rest = static_cast<double>(spec.n - k);
  // For j > J: p(j) <= P(X > J), so sum_{j>J} p(j)^k <= P(X > J)^k.
  return certified_series(
      law,
      [&](std::int64_t j) { return log_c + kd * law.log_pmf(j) + scaled_log(law.log_cdf(j - 1), rest); },
      [&](std::int64_t j) { return log_c + kd * law.log_tail_bound(j); }, tol, "kn_pmf");
}

double kn_pmf(const KnSpec& spec, std::int64_t k, double tol) { return kn_pmf_certified(spec, k, tol).value; }

Certified kn_factorial_moment_certified(const KnSpec& spec, std::int64_t ell, double tol) {
  require_k_in_range(spec, ell, "kn_factorial_moment");
  const auto& law = spec.law;
  const double log_ff = log_falling_factorial(spec.n, ell);
  const double ld = static_cast<double>(ell);
  const double rest = static_cast<double>(spec.n - ell);
  return certified_series(
      law, [&](std::int64_t j) { return log_ff + ld * law.log_pmf(j) + scaled_log(law.log_cdf(j), rest); },
      [&](std::int64_t j) { return log_ff + ld * law.log_tail_bound(j); }, tol, "kn_factorial_moment");
}

double kn_factorial_moment(const KnSpec& spec, std::int64_t ell, double tol) {
  return kn_factorial_moment_certified(spec, ell, tol).value;
}

namespace {

struct FullPmf {
  TruncatedPMF pmf;
  double entry_error = 0.0;  // sum of per-entry certified series errors
};

FullPmf kn_full_pmf_impl(const KnSpec& spec, double tol) {
  if (!(tol > 0.0)) throw DomainError("kn_full_pmf: tol must be positive");
  FullPmf out;
  out.pmf.k_min = 1;
  CompensatedSum listed;
  CompensatedSum errors;
  double budget = 1.0;
  for (std::int64_t k = 1; k <= spec.n; ++k) {
    // Per-entry tolerances shrink geometrically so their total stays below tol/4.
    const double entry_tol = std::max(1e-300, std::ldexp(tol, -static_cast<int>(std::min<std::int64_t>(k + 1, 1000))));
    const Certified c = kn_pmf_certified(spec, k, entry_tol);
    out.pmf.probs.push_back(c.value);
    listed += c.value;
    errors += c.error;
    // Entries are lower bounds, so 1 - sum covers both the unlisted k and the
    // shortfall of every listed entry.
    budget = std::max(0.0, 1.0 - listed.value()) + kLogSpaceSlack;
    if (budget <= tol) break;
  }
  if (budget > tol) {
    throw TruncationError("kn_full_pmf: mass budget did not reach tol", budget);
  }
  out.pmf.tail_mass_bound = budget;
  out.entry_error = errors.value();
  return out;
}

}  // namespace

TruncatedPMF kn_full_pmf(const KnSpec& spec, double tol) { return kn_full_pmf_impl(spec, tol).pmf; }

double kn_star_pmf(const KnSpec& spec, std::int64_t k, double tol) {
  require_k_in_range(spec, k, "kn_star_pmf");
  const double mean = kn_factorial_moment(spec, 1, tol);
  return static_cast<double>(k) * kn_pmf(spec, k, tol) / mean;
}

TruncatedPMF kn_star_full_pmf(const KnSpec& spec, double tol) {
  const FullPmf base = kn_full_pmf_impl(spec, tol / 4.0);
  const Certified mean = kn_factorial_moment_certified(spec, 1, tol / 4.0);
  TruncatedPMF out;
  out.k_min = 1;
  CompensatedSum listed;
  for (std::size_t i = 0; i < base.pmf.probs.size(); ++i) {
    const double v = static_cast<double>(i + 1) * base.pmf.probs[i] / mean.value;
    out.probs.push_back(v);
    listed += v;
  }
  // Entries can overshoot through the (under-estimated) mean, so the budget
  // counts the entry errors twice on top of the unlisted mass.
  const double k_max = static_cast<double>(out.probs.size());
  const double entry_slop = (k_max * base.pmf.tail_mass_bound + mean.error) / mean.value;
  out.tail_mass_bound = std::max(0.0, 1.0 - listed.value()) + 2.0 * entry_slop + kLogSpaceSlack;
  return out;
}

DiscreteLaw m_law(const KnSpec& spec, double tol) {
  if (!(tol > 0.0)) throw DomainError("m_law: tol must be positive");
  const DiscreteLaw base = spec.law;
  const double rest = static_cast<double>(spec.n - 1);
  auto log_weight = [base, rest](std::int64_t m) { return base.log_pmf(m) + scaled_log(base.log_cdf(m), rest); };

  // Cumulative weights until the unlisted weight is negligible relative to the total.
  constexpr std::size_t kMaxTable = 20'000'000;
  auto prefix = std::make_shared<std::vector<double>>(1, 0.0);
  CompensatedSum running;
  const double rel = std::min(tol, 1e-15) * 1e-3;
  for (std::int64_t m = 1;; ++m) {
    const double lw = log_weight(m);
    if (lw > kNegInf) running += std::exp(lw);
    prefix->push_back(running.value());
    if (base.support_max() && m >= *base.support_max()) break;
    if (running.value() > 0.0 && base.tail_bound(m) <= rel * running.value()) break;
    if (prefix->size() > kMaxTable) throw TruncationError("m_law: table for the law of M too large", base.tail_bound(m));
  }
  const double total = prefix->back();
  if (!(total > 0.0)) throw NumericalError("m_law: normalising constant underflowed", total);
  const double log_total = std::log(total);
  for (double& v : *prefix) v /= total;
  prefix->back() = 1.0;
  const auto table_end = static_cast<std::int64_t>(prefix->size()) - 1;

  DiscreteLaw::Definition def;
  def.log_pmf = [log_weight, log_total](std::int64_t m) { return log_weight(m) - log_total; };
  def.pmf = [log_weight, log_total](std::int64_t m) { return std::exp(log_weight(m) - log_total); };
  def.cdf = [prefix, table_end](std::int64_t m) {
    return m >= table_end ? 1.0 : (*prefix)[static_cast<std::size_t>(m)];
  };
  def.quantile = [prefix, table_end](double u) {
    auto it = std::lower_bound(prefix->begin() + 1, prefix->end(), u);
    return std::min<std::int64_t>(table_end, it - prefix->begin());
  };
  // P(M > j) <= P(X > j) / Z, and total <= Z keeps this conservative.
  def.log_tail = [base, log_total](std::int64_t j) { return base.log_tail_bound(j) - log_total; };
  def.tail_ratio = base.tail_ratio();
  def.tail_constant = std::min(std::numeric_limits<double>::max(), base.tail_constant() / total);
  def.support_max = base.support_max();
  def.name = "argmax(" + base.name() + ")";
  return DiscreteLaw(std::move(def));
}

double q_of_m(const DiscreteLaw& law, std::int64_t m) {
  const double lc = law.log_cdf(m);
  if (!(lc > kNegInf)) throw DomainError("q_of_m: F(m) must be positive");
  return std::exp(law.log_pmf(m) - lc);
}

double q_moment(const KnSpec& spec, int j, double tol) {
  if (j != 1 && j != 2) throw DomainError("q_moment: j must be 1 or 2");
  if (spec.n < j + 1) throw DomainError("q_moment: needs n >= 2 for j = 1 and n >= 3 for j = 2");
  const DiscreteLaw mlaw = m_law(spec, tol);
  const DiscreteLaw& base = spec.law;
  const double jd = static_cast<double>(j);
  // q(m) <= 1, so the remainder is at most P(M > J).
  return certified_series(
             mlaw,
             [&](std::int64_t m) {
               const double lp = mlaw.log_pmf(m);
               if (!(lp > kNegInf)) return kNegInf;
               return lp + jd * (base.log_pmf(m) - base.log_cdf(m));
             },
             [&](std::int64_t m) { return mlaw.log_tail_bound(m); }, tol, "q_moment")
      .value;
}

KnMoments kn_moments(const KnSpec& spec, double tol) {
  KnMoments out;
  out.n = spec.n;
  CompensatedSum err;
  auto take = [&err](const Certified& c) {
    err += c.error;
    return c.value;
  };
  out.mean = take(kn_factorial_moment_certified(spec, 1, tol));
  out.p_one = take(kn_pmf_certified(spec, 1, tol));
  if (spec.n >= 2) {
    out.factorial2 = take(kn_factorial_moment_certified(spec, 2, tol));
    out.p_two = take(kn_pmf_certified(spec, 2, tol));
  }
  if (spec.n >= 3) out.factorial3 = take(kn_factorial_moment_certified(spec, 3, tol));
  out.truncation_error = err.value();
  return out;
}

}  // namespace maxties
