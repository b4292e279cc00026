#include "maxties/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "maxties/errors.hpp"

namespace maxties {

namespace {

constexpr std::uint64_t kChunkSize = 1 << 16;

std::uint32_t low_word(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
std::uint32_t high_word(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {
  std::seed_seq seq{low_word(seed), high_word(seed), low_word(stream_id), high_word(stream_id)};
  engine_.seed(seq);
}

double RngStream::uniform() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

void EmpiricalPMF::add(std::int64_t k, std::uint64_t count) {
  counts_[k] += count;
  sample_size_ += count;
}

void EmpiricalPMF::merge(const EmpiricalPMF& other) {
  for (const auto& [k, c] : other.counts_) add(k, c);
}

std::uint64_t EmpiricalPMF::count(std::int64_t k) const {
  const auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

double EmpiricalPMF::frequency(std::int64_t k) const {
  if (sample_size_ == 0) return 0.0;
  return static_cast<double>(count(k)) / static_cast<double>(sample_size_);
}

double EmpiricalPMF::mean() const {
  if (sample_size_ == 0) return 0.0;
  CompensatedSum s;
  for (const auto& [k, c] : counts_) s += static_cast<double>(k) * static_cast<double>(c);
  return s.value() / static_cast<double>(sample_size_);
}

std::int64_t sample_kn(const KnSpec& spec, RngStream& rng) {
  std::int64_t best = 0;
  std::int64_t ties = 0;
  for (std::int64_t i = 0; i < spec.n; ++i) {
    const std::int64_t x = spec.law.quantile(rng.uniform());
    if (x > best) {
      best = x;
      ties = 1;
    } else if (x == best) {
      ++ties;
    }
  }
  return ties;
}

KnStarSampler::KnStarSampler(KnSpec spec, double tol) : spec_(std::move(spec)), max_law_(m_law(spec_, tol)) {}

std::int64_t KnStarSampler::operator()(RngStream& rng) const {
  const std::int64_t top = max_law_.quantile(rng.uniform());
  const double cap = spec_.law.cdf(top);
  std::int64_t ties = 1;
  for (std::int64_t i = 1; i < spec_.n; ++i) {
    const std::int64_t x = std::min(top, spec_.law.quantile(rng.uniform() * cap));
    if (x == top) ++ties;
  }
  return ties;
}

std::int64_t sample_kn_star(const KnSpec& spec, RngStream& rng) { return KnStarSampler(spec)(rng); }

std::int64_t sample_kn_al(const NearOrderSpec& spec, RngStream& rng) {
  std::vector<double> xs(static_cast<std::size_t>(spec.n));
  for (double& x : xs) x = spec.law.quantile(rng.uniform());
  const auto pivot = xs.begin() + (spec.n - spec.ell);
  std::nth_element(xs.begin(), pivot, xs.end());
  const double order_stat = *pivot;
  const double lower = order_stat - spec.a;
  return std::count_if(xs.begin(), xs.end(), [&](double x) { return x > lower && x < order_stat; });
}

EmpiricalTv empirical_tv(const EmpiricalPMF& emp, const TruncatedPMF& target) {
  if (emp.sample_size() == 0) throw DomainError("empirical_tv: empty sample");
  const double n = static_cast<double>(emp.sample_size());
  CompensatedSum l1;
  CompensatedSum spread;
  for (std::int64_t k = target.k_min; k <= target.k_max(); ++k) {
    const double p = target.at(k);
    l1 += std::abs(emp.frequency(k) - p);
    spread += std::sqrt(std::max(0.0, p * (1.0 - p)) / n);
  }
  for (const auto& [k, c] : emp.counts()) {
    if (k < target.k_min || k > target.k_max()) l1 += static_cast<double>(c) / n;
  }
  EmpiricalTv out;
  out.estimate = std::min(1.0, 0.5 * l1.value());
  out.radius = 0.5 * spread.value() + std::sqrt(std::log(1.0 / kTvRadiusFailureProb) / (2.0 * n)) +
               target.tail_mass_bound;
  return out;
}

EmpiricalPMF simulate(const Sampler& sampler, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<EmpiricalPMF> partial(chunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      RngStream rng(seed, c);
      const std::uint64_t size = std::min(kChunkSize, samples - c * kChunkSize);
      for (std::uint64_t i = 0; i < size; ++i) partial[c].add(sampler(rng));
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1))));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  EmpiricalPMF total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

GoodnessOfFit chi_square_gof(const EmpiricalPMF& emp, const TruncatedPMF& target) {
  if (emp.sample_size() == 0) throw DomainError("chi_square_gof: empty sample");
  const double n = static_cast<double>(emp.sample_size());
  struct Cell {
    double expected = 0.0;
    double observed = 0.0;
  };
  std::vector<Cell> cells;
  Cell open;
  CompensatedSum listed;
  double observed_listed = 0.0;
  for (std::int64_t k = target.k_min; k <= target.k_max(); ++k) {
    open.expected += n * target.at(k);
    open.observed += static_cast<double>(emp.count(k));
    listed += target.at(k);
    observed_listed += static_cast<double>(emp.count(k));
    if (open.expected >= 5.0) {
      cells.push_back(open);
      open = Cell{};
    }
  }
  open.expected += n * std::max(0.0, 1.0 - listed.value());
  open.observed += n - observed_listed;
  if (open.expected >= 5.0 || cells.empty()) {
    cells.push_back(open);
  } else {
    cells.back().expected += open.expected;
    cells.back().observed += open.observed;
  }
  GoodnessOfFit out;
  out.degrees_of_freedom = static_cast<int>(cells.size()) - 1;
  if (out.degrees_of_freedom < 1) return out;
  CompensatedSum stat;
  for (const auto& c : cells) {
    const double d = c.observed - c.expected;
    stat += d * d / c.expected;
  }
  out.statistic = stat.value();
  const boost::math::chi_squared dist(out.degrees_of_freedom);
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

}  // namespace maxties
