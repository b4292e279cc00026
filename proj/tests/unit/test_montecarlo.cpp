#include <doctest.h>

#include <cmath>
#include <vector>

#include "maxties/bounds_continuous.hpp"
#include "maxties/maxima_discrete.hpp"
#include "maxties/montecarlo.hpp"

using namespace maxties;

namespace {

constexpr std::uint64_t kSeed = 424242;

void check_pointwise(const EmpiricalPMF& emp, const TruncatedPMF& exact) {
  const double n = static_cast<double>(emp.sample_size());
  for (auto k = exact.k_min; k <= exact.k_max(); ++k) {
    const double p = exact.at(k);
    const double se = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(emp.frequency(k) - p) <= 4 * se + 1e-12);
  }
}

}  // namespace

TEST_SUITE("montecarlo") {
  TEST_CASE("streams are reproducible and distinct") {
    RngStream a(1, 0);
    RngStream b(1, 0);
    RngStream c(1, 1);
    int same = 0;
    for (int i = 0; i < 1000; ++i) {
      const double x = a.uniform();
      CHECK(x == b.uniform());
      CHECK(x > 0.0);
      CHECK(x < 1.0);
      if (x == c.uniform()) ++same;
    }
    CHECK(same == 0);
  }

  TEST_CASE("trivial samplers") {
    RngStream rng(kSeed, 0);
    const KnSpec single(make_geometric(0.3), 1);
    const KnSpec tie(make_tabulated(std::vector<double>{1.0}), 7);
    for (int i = 0; i < 100; ++i) {
      CHECK(sample_kn(single, rng) == 1);
      CHECK(sample_kn(tie, rng) == 7);
      CHECK(sample_kn_star(single, rng) == 1);
    }
    const NearOrderSpec wide(make_uniform(1.0), 10, 3, 2.0);
    for (int i = 0; i < 100; ++i) CHECK(sample_kn_al(wide, rng) == 7);
  }

  TEST_CASE("empirical law of K_n matches the exact pmf") {
    const KnSpec spec(make_geometric(0.5), 10);
    const auto emp = simulate([&](RngStream& r) { return sample_kn(spec, r); }, 1000000, kSeed);
    CHECK(emp.sample_size() == 1000000);
    check_pointwise(emp, kn_full_pmf(spec));
  }

  TEST_CASE("size-biased construction") {
    const KnSpec two(make_tabulated(std::vector<double>{0.5, 0.5}), 2);
    const KnStarSampler s2(two);
    const auto emp = simulate([&](RngStream& r) { return s2(r); }, 1000000, kSeed);
    check_pointwise(emp, kn_star_full_pmf(two));

    const KnSpec geo(make_geometric(0.3), 10);
    const KnStarSampler sg(geo);
    const auto eg = simulate([&](RngStream& r) { return sg(r); }, 1000000, kSeed + 1);
    const auto m = kn_moments(geo);
    const double target = m.second_moment() / m.mean;
    // Var(K*) <= E[K*^2] <= n E[K*].
    const double se = std::sqrt(10.0 * target / 1e6);
    CHECK(std::abs(eg.mean() - target) <= 4 * se);
    CHECK(chi_square_gof(eg, kn_star_full_pmf(geo)).p_value > 1e-3);
  }

  TEST_CASE("near-order counts") {
    const NearOrderSpec uni(make_uniform(1.0), 10, 1, 0.1);
    const auto eu = simulate([&](RngStream& r) { return sample_kn_al(uni, r); }, 1000000, kSeed);
    const double mean = 9 * uniform_m_exact(10, 1, 0.1, 1.0, 1);
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-8));
    const double se = std::sqrt(9.0 * mean / 1e6);  // Var <= E[count^2] <= 9 E[count]
    CHECK(std::abs(eu.mean() - mean) <= 4 * se);

    const NearOrderSpec gum(make_gumbel(), 20, 2, 0.5);
    const auto eg = simulate([&](RngStream& r) { return sample_kn_al(gum, r); }, 1000000, kSeed);
    check_pointwise(eg, near_order_count_pmf(gum));
  }

  TEST_CASE("empirical TV") {
    TruncatedPMF point;
    point.k_min = 3;
    point.probs = {1.0};
    EmpiricalPMF at3;
    at3.add(3, 50);
    CHECK(empirical_tv(at3, point).estimate == 0.0);
    EmpiricalPMF at5;
    at5.add(5, 50);
    CHECK(empirical_tv(at5, point).estimate == doctest::Approx(1.0));
  }

  TEST_CASE("empirical TV radius covers sampling noise") {
    const std::vector<double> w{0.1, 0.2, 0.3, 0.15, 0.15, 0.05, 0.05};
    const auto law = make_tabulated(w);
    TruncatedPMF target;
    target.k_min = 1;
    target.probs = w;
    int covered = 0;
    for (std::uint64_t rep = 0; rep < 100; ++rep) {
      const auto emp = simulate([&](RngStream& r) { return law.quantile(r.uniform()); }, 1000000, kSeed + rep);
      const auto tv = empirical_tv(emp, target);
      if (tv.estimate <= tv.radius) ++covered;
    }
    CHECK(covered >= 99);
  }

  TEST_CASE("results do not depend on the number of workers") {
    const KnSpec spec(make_geometric(0.4), 6);
    const Sampler s = [&](RngStream& r) { return sample_kn(spec, r); };
    const auto one = simulate(s, 300000, 99, 1);
    const auto four = simulate(s, 300000, 99, 4);
    CHECK(one.counts() == four.counts());
    const auto again = simulate(s, 300000, 99, 1);
    CHECK(one.counts() == again.counts());
    const auto other = simulate(s, 300000, 100, 1);
    CHECK(one.counts() != other.counts());
  }

  TEST_CASE("chi-square rejects a wrong law") {
    const KnSpec spec(make_geometric(0.3), 10);
    const auto emp = simulate([&](RngStream& r) { return sample_kn(spec, r); }, 200000, kSeed);
    CHECK(chi_square_gof(emp, kn_star_full_pmf(spec)).p_value < 1e-6);
    CHECK(chi_square_gof(emp, kn_full_pmf(spec)).degrees_of_freedom >= 2);
  }
}
