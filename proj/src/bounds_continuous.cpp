#include "maxties/bounds_continuous.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "maxties/errors.hpp"

namespace maxties {

namespace {

constexpr int kMaxDepth = 40;
constexpr double kRelativeFloor = 1e-14;
// Share of the caller's tolerance the adaptive scheme aims for, so that the
// summed local error estimates land comfortably below it.
constexpr double kToleranceShare = 1e-2;

void require_j(int j, const char* who) {
  if (j != 1 && j != 2) throw DomainError(std::string(who) + ": j must be 1 or 2");
}

// Pieces of the real line to integrate over: the support split at lo + a,
// where r_a has a kink for laws bounded below, or at a central quantile of
// the order statistic for laws unbounded below.
std::vector<std::pair<double, double>> integration_pieces(const NearOrderSpec& spec) {
  const double lo = spec.law.support_lo();
  const double hi = spec.law.support_hi();
  double split;
  if (std::isfinite(lo)) {
    split = lo + spec.a;
  } else {
    const double n = static_cast<double>(spec.n);
    const double u = std::clamp(1.0 - (static_cast<double>(spec.ell) - 0.3) / (n + 0.4), 1e-6, 1.0 - 1e-6);
    split = spec.law.quantile(u);
  }
  if (split > lo && split < hi) return {{lo, split}, {split, hi}};
  return {{lo, hi}};
}

using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;

// Bisects [a, b] until the 61-point Kronrod / 30-point Gauss difference on
// each subinterval is below its share of abs_tol, or below a relative floor.
// Boost's own adaptive driver only has a relative criterion, which never
// terminates on pieces where the integrand is ~1e-40 and rounding-noisy.
template <class G>
void bisect(const G& g, double a, double b, double abs_tol, int depth, CompensatedSum& value, CompensatedSum& error) {
  double err = 0.0;
  const double v = Quad::integrate(g, a, b, 0, 0.0, &err);
  if (err <= std::max(abs_tol, kRelativeFloor * std::abs(v)) || depth == 0) {
    value += v;
    error += err;
    return;
  }
  const double mid = 0.5 * (a + b);
  bisect(g, a, mid, 0.5 * abs_tol, depth - 1, value, error);
  bisect(g, mid, b, 0.5 * abs_tol, depth - 1, value, error);
}

template <class F>
Certified integrate_pieces(const NearOrderSpec& spec, F integrand, double tol, const char* who) {
  CompensatedSum value;
  CompensatedSum error;
  const double share = kToleranceShare * tol;
  for (const auto& [a, b] : integration_pieces(spec)) {
    if (std::isfinite(a) && std::isfinite(b)) {
      bisect(integrand, a, b, share, kMaxDepth, value, error);
    } else if (std::isfinite(b)) {
      // x = b - t/(1-t), t in [0, 1)
      auto g = [&](double t) {
        const double s = 1.0 - t;
        return integrand(b - t / s) / (s * s);
      };
      bisect(g, 0.0, 1.0, share, kMaxDepth, value, error);
    } else if (std::isfinite(a)) {
      auto g = [&](double t) {
        const double s = 1.0 - t;
        return integrand(a + t / s) / (s * s);
      };
      bisect(g, 0.0, 1.0, share, kMaxDepth, value, error);
    } else {
      throw DomainError(std::string(who) + ": support must be split into half-lines");
    }
  }
  if (!(error.value() <= tol) || !std::isfinite(value.value())) {
    throw IntegrationError(std::string(who) + ": quadrature did not reach the requested tolerance",
                           error.value());
  }
  return {value.value(), error.value()};
}

}  // namespace

MixedBinomialSpec::MixedBinomialSpec(std::int64_t n_, std::int64_t ell_, double mean_q_, double mean_q2_)
    : n(n_), ell(ell_), mean_q(mean_q_), mean_q2(mean_q2_) {
  if (n < 1 || ell < 1 || ell > n) throw DomainError("MixedBinomialSpec: need 1 <= ell <= n");
  if (!(mean_q >= 0.0 && mean_q <= 1.0) || !(mean_q2 >= 0.0 && mean_q2 <= 1.0)) {
    throw DomainError("MixedBinomialSpec: moments of Q must lie in [0,1]");
  }
  constexpr double slack = 1e-12;
  if (mean_q2 > mean_q + slack) throw DomainError("MixedBinomialSpec: E[Q^2] > E[Q] is impossible for Q in [0,1]");
  if (mean_q * mean_q > mean_q2 + slack) throw DomainError("MixedBinomialSpec: E[Q]^2 > E[Q^2] violates Jensen");
}

NearOrderSpec::NearOrderSpec(ContinuousLaw law_, std::int64_t n_, std::int64_t ell_, double a_)
    : law(std::move(law_)), n(n_), ell(ell_), a(a_) {
  if (n < 1 || ell < 1 || ell > n) throw DomainError("NearOrderSpec: need 1 <= ell <= n");
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("NearOrderSpec: a must be positive");
}

BoundReport thm4_bound(const MixedBinomialSpec& spec) {
  if (spec.n - spec.ell < 1) throw DomainError("thm4: needs n - ell >= 1");
  if (!(spec.mean_q > 0.0)) throw DegenerateParameterError("thm4: E[Q] = 0 gives W = 0 and beta = 0");
  const double ell = static_cast<double>(spec.ell);
  const double m = static_cast<double>(spec.n - spec.ell);
  const double mean_w = spec.mean_w();
  const double beta = mean_w / (mean_w + ell);
  // (1 - (1-beta)^ell) / (beta ell), with the numerator via expm1 for small beta.
  const double factor = -std::expm1(ell * std::log1p(-beta)) / (beta * ell);
  const double bracket = (m - 1.0) * spec.mean_q2 / spec.mean_q - (m - 2.0) * spec.mean_q;
  const double bound = factor * mean_w * (beta + (1.0 - beta) * bracket);
  return BoundReport::make("thm4", bound, {{"beta", beta}, {"ell", ell}, {"E[W]", mean_w}},
                           {{"E[Q]", spec.mean_q}, {"E[Q^2]", spec.mean_q2}}, 0.0);
}

double order_stat_density(const NearOrderSpec& spec, double x) {
  const auto& law = spec.law;
  const double lf = law.log_pdf(x);
  if (!(lf > kNegInf)) return 0.0;
  const double n = static_cast<double>(spec.n);
  const double ell = static_cast<double>(spec.ell);
  const double lcoef = std::log(n) + log_binomial(spec.n - 1, spec.ell - 1);
  const double lv = lcoef + scaled_log(law.log_survival(x), ell - 1.0) + scaled_log(law.log_cdf(x), n - ell) + lf;
  return std::isnan(lv) ? 0.0 : std::exp(lv);
}

double near_fraction(const ContinuousLaw& law, double a, double x) {
  const double here = law.log_cdf(x);
  if (!(here > kNegInf)) return 1.0;
  const double below = law.log_cdf(x - a);
  if (!(below > kNegInf)) return 1.0;
  return std::clamp(-std::expm1(below - here), 0.0, 1.0);
}

Certified m_j_integral_certified(const NearOrderSpec& spec, int j, double tol) {
  require_j(j, "m_j_integral");
  const double jd = static_cast<double>(j);
  auto integrand = [&spec, jd](double x) {
    const double dens = order_stat_density(spec, x);
    if (dens == 0.0) return 0.0;
    return dens * std::pow(near_fraction(spec.law, spec.a, x), jd);
  };
  return integrate_pieces(spec, integrand, tol, "m_j_integral");
}

double m_j_integral(const NearOrderSpec& spec, int j, double tol) {
  return m_j_integral_certified(spec, j, tol).value;
}

double gumbel_m_closed(std::int64_t n, double a, int j) {
  require_j(j, "gumbel_m_closed");
  if (n < 1) throw DomainError("gumbel_m_closed: n must be >= 1");
  if (!(a >= 0.0)) throw DomainError("gumbel_m_closed: a must be non-negative");
  const double c = std::expm1(a);
  const double nd = static_cast<double>(n);
  if (j == 1) return c / (nd + c);
  return 2.0 * c * c / ((nd + c) * (nd + 2.0 * c));
}

double gumbel_m_closed(std::int64_t n, std::int64_t ell, double a, int j) {
  require_j(j, "gumbel_m_closed");
  if (n < 1 || ell < 1 || ell > n) throw DomainError("gumbel_m_closed: need 1 <= ell <= n");
  if (!(a >= 0.0)) throw DomainError("gumbel_m_closed: a must be non-negative");
  const double c = std::expm1(a);
  // log of prod_{i<ell} (n-i)/(n-i + m c) for m = 1, 2.
  auto log_prod = [&](double m) {
    CompensatedSum s;
    for (std::int64_t i = 0; i < ell; ++i) s += -std::log1p(m * c / static_cast<double>(n - i));
    return s.value();
  };
  const double s1 = log_prod(1.0);
  if (j == 1) return -std::expm1(s1);
  return std::expm1(log_prod(2.0)) - 2.0 * std::expm1(s1);
}

double uniform_m_closed(std::int64_t n, std::int64_t ell, double a, double b, int j) {
  require_j(j, "uniform_m_closed");
  if (n < 1 || ell < 1 || ell > n) throw DomainError("uniform_m_closed: need 1 <= ell <= n");
  if (n - ell < j) throw DomainError("uniform_m_closed: needs n - ell >= j");
  if (!(a >= 0.0) || !(b > 0.0)) throw DomainError("uniform_m_closed: need a >= 0 and b > 0");
  const double nd = static_cast<double>(n);
  const double m = static_cast<double>(n - ell);
  const double rho = a / b;
  if (j == 1) return rho * nd / m;
  return rho * rho * nd * (nd - 1.0) / (m * (m - 1.0));
}

double uniform_m_exact(std::int64_t n, std::int64_t ell, double a, double b, int j) {
  require_j(j, "uniform_m_exact");
  if (n < 1 || ell < 1 || ell > n) throw DomainError("uniform_m_exact: need 1 <= ell <= n");
  if (!(a >= 0.0) || !(b > 0.0)) throw DomainError("uniform_m_exact: need a >= 0 and b > 0");
  const double rho = a / b;
  if (rho >= 1.0) return 1.0;
  // P(X_{n-ell+1:n} < a) = P(Bin(n, rho) >= n - ell + 1).
  CompensatedSum below;
  for (std::int64_t k = n - ell + 1; k <= n; ++k) below += binomial_pmf(n, rho, k);
  if (n - ell < j) return below.value();
  CompensatedSum above;
  for (std::int64_t k = 0; k <= n - ell - j; ++k) above += binomial_pmf(n - j, rho, k);
  return uniform_m_closed(n, ell, a, b, j) * above.value() + below.value();
}

BoundReport thm3_bound(const NearOrderSpec& spec, double tol) {
  if (spec.n - spec.ell < 1) throw DomainError("thm3: needs n - ell >= 1");
  const Certified m1 = m_j_integral_certified(spec, 1, tol);
  const Certified m2 = m_j_integral_certified(spec, 2, tol);
  if (!(m1.value > 0.0)) throw DegenerateParameterError("thm3: M_1 = 0");
  BoundReport r = thm4_bound(MixedBinomialSpec(spec.n, spec.ell, m1.value, m2.value));
  r.theorem = "thm3";
  r.params["a"] = spec.a;
  r.moments = {{"M_1", m1.value}, {"M_2", m2.value}, {"E[K]-1", r.params.at("E[W]")}};
  r.truncation_error = m1.error + m2.error;
  return r;
}

double gumbel_eq6_bound(std::int64_t n, double a) {
  if (n < 2) throw DomainError("gumbel_eq6_bound: needs n >= 2");
  if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("gumbel_eq6_bound: a must be non-negative");
  const double c = std::expm1(a);
  const double nd = static_cast<double>(n);
  return (nd - 1.0) * c * c / (std::exp(a) * (nd + c)) * (1.0 + (nd - 2.0) / (nd + 2.0 * c));
}

TruncatedPMF mixed_binomial_pmf(std::int64_t trials, std::span<const double> q_values,
                                std::span<const double> q_weights) {
  if (trials < 0) throw DomainError("mixed_binomial_pmf: trials must be non-negative");
  if (q_values.size() != q_weights.size() || q_values.empty()) {
    throw DomainError("mixed_binomial_pmf: need matching, non-empty atoms and weights");
  }
  TruncatedPMF out;
  out.k_min = 0;
  out.probs.assign(static_cast<std::size_t>(trials + 1), 0.0);
  for (std::int64_t k = 0; k <= trials; ++k) {
    CompensatedSum s;
    for (std::size_t i = 0; i < q_values.size(); ++i) s += q_weights[i] * binomial_pmf(trials, q_values[i], k);
    out.probs[static_cast<std::size_t>(k)] = s.value();
  }
  out.tail_mass_bound = std::abs(1.0 - out.listed_mass()) + 1e-14;
  return out;
}

TruncatedPMF near_order_count_pmf(const NearOrderSpec& spec, double tol) {
  const std::int64_t trials = spec.n - spec.ell;
  TruncatedPMF out;
  out.k_min = 0;
  CompensatedSum errors;
  for (std::int64_t k = 0; k <= trials; ++k) {
    auto integrand = [&spec, trials, k](double x) {
      const double dens = order_stat_density(spec, x);
      if (dens == 0.0) return 0.0;
      return dens * binomial_pmf(trials, near_fraction(spec.law, spec.a, x), k);
    };
    const Certified c = integrate_pieces(spec, integrand, tol, "near_order_count_pmf");
    out.probs.push_back(c.value);
    errors += c.error;
  }
  // Half-L1 moves by at most half the summed entry errors.
  out.tail_mass_bound = errors.value() + std::abs(1.0 - out.listed_mass());
  return out;
}

}  // namespace maxties
