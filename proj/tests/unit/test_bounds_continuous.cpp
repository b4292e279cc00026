#include <doctest.h>

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "maxties/approximants.hpp"
#include "maxties/bounds_continuous.hpp"
#include "maxties/errors.hpp"

using namespace maxties;

namespace {

double tv_hi_against_nb(const TruncatedPMF& w, double ell, double beta) {
  return tv_distance(w, negbin_law(ell, beta, 1e-14)).hi;
}

}  // namespace

TEST_SUITE("bounds_continuous") {
  TEST_CASE("spec validation") {
    CHECK_THROWS_AS(MixedBinomialSpec(5, 1, 0.2, 0.3), DomainError);  // E[Q^2] > E[Q]
    CHECK_THROWS_AS(MixedBinomialSpec(5, 1, 0.5, 0.2), DomainError);  // Jensen
    CHECK_THROWS_AS(MixedBinomialSpec(5, 6, 0.5, 0.3), DomainError);
    CHECK_THROWS_AS(NearOrderSpec(make_gumbel(), 5, 1, 0.0), DomainError);
    CHECK_THROWS_AS(thm4_bound(MixedBinomialSpec(5, 1, 0.0, 0.0)), DegenerateParameterError);
    CHECK_THROWS_AS(thm4_bound(MixedBinomialSpec(5, 5, 0.2, 0.05)), DomainError);
  }

  TEST_CASE("thm4 with a degenerate mixing law") {
    const double q = 0.1;
    const auto r = thm4_bound(MixedBinomialSpec(10, 2, q, q * q));
    const double beta = r.params.at("beta");
    CHECK(beta == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
    const double closed = (1 - std::pow(1 - beta, 2)) / (2 * beta) * 8 * q * (beta + (1 - beta) * q);
    CHECK(r.bound == doctest::Approx(closed).epsilon(1e-14));
    CHECK(r.bound == doctest::Approx(12.0 / 49.0).epsilon(1e-14));
    const std::vector<double> atom{q};
    const std::vector<double> one{1.0};
    const auto w = mixed_binomial_pmf(8, atom, one);
    const double tv = tv_hi_against_nb(w, 2.0, beta);
    CHECK(tv == doctest::Approx(0.11494787213660975).epsilon(1e-10));
    CHECK(r.bound >= tv);
    // n = ell + 1: the bracket collapses to q.
    const auto small = thm4_bound(MixedBinomialSpec(3, 2, 0.3, 0.09));
    const double b = small.params.at("beta");
    CHECK(small.bound == doctest::Approx((1 - std::pow(1 - b, 2)) / (2 * b) * 0.3 * (b + (1 - b) * 0.3)).epsilon(1e-14));
  }

  TEST_CASE("thm4 with a two-point mixing law") {
    const std::vector<double> q{0.1, 0.2};
    const std::vector<double> w{0.5, 0.5};
    const auto r = thm4_bound(MixedBinomialSpec(8, 1, 0.15, 0.025));
    CHECK(r.bound == doctest::Approx(0.66585365853658537).epsilon(1e-14));
    const double tv = tv_hi_against_nb(mixed_binomial_pmf(7, q, w), 1.0, r.params.at("beta"));
    CHECK(tv == doctest::Approx(0.19458711998288249).epsilon(1e-10));
    CHECK(r.bound >= tv);
  }

  TEST_CASE("order statistic density") {
    const NearOrderSpec max_spec(make_uniform(1.0), 2, 1, 0.1);
    CHECK(order_stat_density(max_spec, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
    const NearOrderSpec min_spec(make_uniform(1.0), 3, 3, 0.1);
    CHECK(order_stat_density(min_spec, 0.2) == doctest::Approx(3 * 0.8 * 0.8).epsilon(1e-14));
    const auto g = make_gumbel();
    const NearOrderSpec gmax(g, 7, 1, 0.1);
    CHECK(order_stat_density(gmax, 0.4) == doctest::Approx(7 * std::pow(g.cdf(0.4), 6) * g.pdf(0.4)).epsilon(1e-13));
    using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
    for (const auto& law : {make_gumbel(), make_uniform(1.0)}) {
      for (std::int64_t n : {5, 20, 100}) {
        for (std::int64_t l : {1, 2, 3}) {
          const NearOrderSpec spec(law, n, l, 0.5);
          const double mass = Quad::integrate([&](double x) { return order_stat_density(spec, x); },
                                              law.support_lo(), law.support_hi(), 25, 1e-13);
          CHECK(std::abs(mass - 1.0) <= 1e-9);
        }
      }
    }
  }

  TEST_CASE("near fraction") {
    const auto u = make_uniform(1.0);
    CHECK(near_fraction(u, 0.1, 0.05) == 1.0);
    CHECK(near_fraction(u, 0.1, 0.5) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(near_fraction(make_gumbel(), 0.5, -100.0) == 1.0);
  }

  TEST_CASE("Gumbel moments: closed forms and quadrature") {
    const double a = std::log(2.0);
    CHECK(gumbel_m_closed(10, a, 1) == doctest::Approx(1.0 / 11.0).epsilon(1e-15));
    CHECK(gumbel_m_closed(10, a, 2) == doctest::Approx(1.0 / 66.0).epsilon(1e-15));
    const NearOrderSpec spec(make_gumbel(), 10, 1, a);
    CHECK(std::abs(m_j_integral(spec, 1) - 1.0 / 11.0) <= 1e-8);
    CHECK(std::abs(m_j_integral(spec, 2) - 1.0 / 66.0) <= 1e-8);
    CHECK(gumbel_m_closed(10, 1e-12, 1) <= 1e-12);
    // The general-ell form reduces to the ell = 1 expressions.
    for (double x : {0.1, 0.5, 2.0}) {
      for (std::int64_t n : {5, 100}) {
        CHECK(gumbel_m_closed(n, 1, x, 1) == doctest::Approx(gumbel_m_closed(n, x, 1)).epsilon(1e-14));
        CHECK(gumbel_m_closed(n, 1, x, 2) == doctest::Approx(gumbel_m_closed(n, x, 2)).epsilon(1e-13));
      }
    }
    // 30-digit quadrature values.
    const NearOrderSpec two(make_gumbel(), 10, 2, 0.5);
    CHECK(gumbel_m_closed(10, 2, 0.5, 1) == doctest::Approx(0.1240581240477494).epsilon(1e-14));
    CHECK(gumbel_m_closed(10, 2, 0.5, 2) == doctest::Approx(0.021745692944551036).epsilon(1e-13));
    CHECK(std::abs(m_j_integral(two, 1) - 0.1240581240477494) <= 1e-8);
    CHECK(std::abs(m_j_integral(two, 2) - 0.021745692944551036) <= 1e-8);
  }

  TEST_CASE("uniform moments") {
    CHECK(uniform_m_closed(10, 1, 0.1, 1.0, 1) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(uniform_m_closed(10, 2, 0.1, 1.0, 2) == doctest::Approx(0.01 * 90 / 56).epsilon(1e-15));
    CHECK(uniform_m_closed(10, 1, 1.0, 1.0, 1) == doctest::Approx(10.0 / 9.0));
    CHECK(uniform_m_exact(10, 1, 1.0, 1.0, 1) == 1.0);
    CHECK(uniform_m_exact(10, 1, 1e-9, 1.0, 1) <= 1e-8);
    for (double a : {0.1, 0.5, 1.0, 2.0}) {
      for (std::int64_t n : {5, 20, 100}) {
        for (std::int64_t l : {1, 2, 3}) {
          const NearOrderSpec spec(make_uniform(1.0), n, l, a);
          CHECK(std::abs(m_j_integral(spec, 1) - uniform_m_exact(n, l, a, 1.0, 1)) <= 1e-8);
          if (n - l >= 2) CHECK(std::abs(m_j_integral(spec, 2) - uniform_m_exact(n, l, a, 1.0, 2)) <= 1e-8);
        }
      }
    }
    // For a/b small the unclamped expressions are accurate.
    const NearOrderSpec tiny(make_uniform(1.0), 100, 2, 0.01);
    CHECK(std::abs(m_j_integral(tiny, 1) - uniform_m_closed(100, 2, 0.01, 1.0, 1)) <= 1e-8);
    CHECK_THROWS_AS(uniform_m_closed(3, 2, 0.1, 1.0, 2), DomainError);
  }

  TEST_CASE("Jensen holds for the quadrature moments") {
    for (const auto& law : {make_gumbel(), make_uniform(1.0)}) {
      for (double a : {0.1, 1.0}) {
        const NearOrderSpec spec(law, 20, 2, a);
        const double m1 = m_j_integral(spec, 1);
        const double m2 = m_j_integral(spec, 2);
        CHECK(m1 * m1 <= m2 + 1e-12);
        CHECK(m2 <= m1 + 1e-12);
      }
    }
  }

  TEST_CASE("thm3 values") {
    const auto u = thm3_bound(NearOrderSpec(make_uniform(1.0), 10, 1, 0.1));
    CHECK(std::abs(u.bound - 0.561111) <= 1e-6);
    CHECK(u.params.at("beta") == doctest::Approx(0.5).epsilon(1e-8));
    const auto g = thm3_bound(NearOrderSpec(make_gumbel(), 10, 2, 0.5));
    CHECK(g.bound == doctest::Approx(0.5416329690287977).epsilon(1e-8));
    CHECK(thm3_bound(NearOrderSpec(make_gumbel(), 10, 1, std::log(2.0))).bound ==
          doctest::Approx(0.68181818181818182).epsilon(1e-8));
    // Same code path as thm4.
    const NearOrderSpec spec(make_gumbel(), 30, 3, 0.7);
    const auto r3 = thm3_bound(spec);
    const auto r4 = thm4_bound(MixedBinomialSpec(30, 3, r3.moments.at("M_1"), r3.moments.at("M_2")));
    CHECK(r3.bound == r4.bound);
  }

  TEST_CASE("Gumbel closed-form bound") {
    CHECK(gumbel_eq6_bound(2, std::log(2.0)) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(gumbel_eq6_bound(20, 0.0) == 0.0);
    CHECK(gumbel_eq6_bound(20, 1e-6) < 1e-9);
    for (std::int64_t n : {20, 100}) {
      double previous = 0.0;
      for (double a = 0.05; a <= 3.0; a += 0.05) {
        const double b = gumbel_eq6_bound(n, a);
        CHECK(b > previous);
        previous = b;
      }
      for (double a : {0.05, 0.3, 1.0}) {
        CHECK(thm3_bound(NearOrderSpec(make_gumbel(), n, 1, a)).bound ==
              doctest::Approx(gumbel_eq6_bound(n, a)).epsilon(1e-8));
      }
    }
    CHECK_THROWS_AS(gumbel_eq6_bound(1, 0.5), DomainError);
  }

  TEST_CASE("mixture pmf of the near-order count") {
    const NearOrderSpec spec(make_uniform(1.0), 8, 1, 0.05);
    const auto w = near_order_count_pmf(spec);
    CHECK(w.k_min == 0);
    CHECK(w.k_max() == 7);
    CHECK(std::abs(w.listed_mass() - 1.0) <= 1e-9);
    CompensatedSum mean;
    for (std::int64_t k = 0; k <= 7; ++k) mean += static_cast<double>(k) * w.at(k);
    CHECK(mean.value() == doctest::Approx(7 * m_j_integral(spec, 1)).epsilon(1e-9));
    const auto r = thm3_bound(spec);
    CHECK(r.bound >= tv_hi_against_nb(w, 1.0, r.params.at("beta")));
  }

  TEST_CASE("thm3 dominates on small uniform and Gumbel specs") {
    for (const auto& law : {make_uniform(1.0), make_gumbel()}) {
      for (std::int64_t n : {4, 8, 12}) {
        for (std::int64_t l : {1, 2}) {
          for (double a : {0.05, 0.3}) {
            const NearOrderSpec spec(law, n, l, a);
            const auto r = thm3_bound(spec);
            CHECK(r.bound >= tv_hi_against_nb(near_order_count_pmf(spec), static_cast<double>(l), r.params.at("beta")));
          }
        }
      }
    }
  }
}
