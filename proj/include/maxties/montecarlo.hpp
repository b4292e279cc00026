#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>

#include "maxties/approximants.hpp"
#include "maxties/bounds_continuous.hpp"
#include "maxties/distributions.hpp"
#include "maxties/maxima_discrete.hpp"

namespace maxties {

/// A reproducible random stream identified by (seed, stream_id).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  /// Uniform on the open interval (0, 1), 53 random bits.
  double uniform();
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

/// Outcome counts of a simulation; ordered so iteration is deterministic.
class EmpiricalPMF {
 public:
  void add(std::int64_t k, std::uint64_t count = 1);
  void merge(const EmpiricalPMF& other);
  std::uint64_t count(std::int64_t k) const;
  double frequency(std::int64_t k) const;
  double mean() const;
  std::uint64_t sample_size() const noexcept { return sample_size_; }
  const std::map<std::int64_t, std::uint64_t>& counts() const noexcept { return counts_; }

 private:
  std::map<std::int64_t, std::uint64_t> counts_;
  std::uint64_t sample_size_ = 0;
};

std::int64_t sample_kn(const KnSpec& spec, RngStream& rng);

/// Draws K* by placing the maximum at M ~ m_law(spec) and drawing the other
/// n - 1 values from the law conditioned on being <= M.
class KnStarSampler {
 public:
  explicit KnStarSampler(KnSpec spec, double tol = kDefaultTol);
  std::int64_t operator()(RngStream& rng) const;

 private:
  KnSpec spec_;
  DiscreteLaw max_law_;
};

std::int64_t sample_kn_star(const KnSpec& spec, RngStream& rng);

/// Number of draws strictly inside (X_{n-ell+1:n} - a, X_{n-ell+1:n}).
/// Distributed as MixBin(n - ell, r_a(X_{n-ell+1:n})); the order statistic
/// itself is not counted.
std::int64_t sample_kn_al(const NearOrderSpec& spec, RngStream& rng);

/// Confidence level of empirical_tv radii: the radius is exceeded with
/// probability at most this.
inline constexpr double kTvRadiusFailureProb = 1e-3;

struct EmpiricalTv {
  double estimate = 0.0;
  double radius = 0.0;
};

/// estimate = half-L1 between empirical frequencies and the listed target.
/// radius bounds TV(empirical, target) for samples drawn from target with
/// probability >= 1 - kTvRadiusFailureProb:
///   1/2 sum_k sqrt(p_k (1 - p_k) / N)   (mean, by Jensen)
/// + sqrt(log(1/delta) / (2N))           (McDiarmid, each draw moves TV by <= 1/N)
/// + target tail budget.
EmpiricalTv empirical_tv(const EmpiricalPMF& emp, const TruncatedPMF& target);

using Sampler = std::function<std::int64_t(RngStream&)>;

/// Draws `samples` values in fixed chunks; chunk c uses stream (seed, c), so
/// the result does not depend on the number of workers.
EmpiricalPMF simulate(const Sampler& sampler, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);

struct GoodnessOfFit {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

/// Pearson chi-square test of emp against target, pooling adjacent outcomes
/// until each cell expects at least 5 observations. Mass the target does not
/// list goes into the last cell.
GoodnessOfFit chi_square_gof(const EmpiricalPMF& emp, const TruncatedPMF& target);

}  // namespace maxties
