#include "bsglab/exact.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace bsglab;

namespace {

BigRat r(long n, long d) { return BigRat(n, d); }

double as_d(const BigRat& q) { return q.convert_to<double>(); }

BigRat dist_sum(const StateDist& d) { return d.p_empty + d.p_zero + d.p_one; }

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(10, 10) == 1);
  CHECK(binom(4, 7) == 0);
  CHECK(binom(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("state distribution closed form") {
  const StateDist d1 = state_dist_closed(1);
  CHECK(d1.p_empty == 0);
  CHECK(d1.p_zero == r(1, 2));
  CHECK(d1.p_one == r(1, 2));
  const StateDist d2 = state_dist_closed(2);
  CHECK(d2.p_empty == r(1, 2));
  CHECK(d2.p_zero == r(1, 4));
  CHECK(d2.p_one == r(1, 4));
  const StateDist d3 = state_dist_closed(3);
  CHECK(d3.p_empty == r(1, 4));
  CHECK(d3.p_zero == r(3, 8));
  CHECK(d3.p_one == r(3, 8));
  const StateDist d0 = state_dist_closed(0);
  CHECK(d0.p_empty == 1);

  for (int n = 0; n <= 80; ++n) {
    const StateDist c = state_dist_closed(n);
    const StateDist m = state_dist_matrix(n);
    REQUIRE(c.p_empty == m.p_empty);
    REQUIRE(c.p_zero == m.p_zero);
    REQUIRE(c.p_one == m.p_one);
    REQUIRE(dist_sum(c) == 1);
  }
  // limit is uniform over the three states; deviation halves in quarters
  const StateDist big = state_dist_closed(100);
  CHECK(big.p_empty - r(1, 3) == BigRat(BigInt(2), BigInt(3) * (BigInt(1) << 100)));
}

TEST_CASE("state distribution vs enumeration") {
  for (int n = 1; n <= 14; ++n) {
    const auto acc = oracle::state_dist_by_enumeration(n);
    const BigInt total = BigInt(1) << n;
    const StateDist c = state_dist_closed(n);
    REQUIRE(c.p_empty == BigRat(acc[static_cast<std::size_t>(n)].empty, total));
    REQUIRE(c.p_zero == BigRat(acc[static_cast<std::size_t>(n)].zero, total));
    REQUIRE(c.p_one == BigRat(acc[static_cast<std::size_t>(n)].one, total));
  }
}

TEST_CASE("emission count pmf") {
  const PmfTable t1 = pmf_table(1);
  REQUIRE(t1.exact);
  CHECK(t1.p == std::vector<BigRat>{1});
  const PmfTable t2 = pmf_table(2);
  CHECK(t2.p == std::vector<BigRat>{r(1, 2), r(1, 2)});
  const PmfTable t4 = pmf_table(4);
  CHECK(t4.p == std::vector<BigRat>{r(1, 8), r(5, 8), r(1, 4)});
  CHECK(t4.mean == r(9, 8));
  CHECK(t4.variance == r(23, 64));

  for (int n = 1; n <= 16; ++n) {
    const auto want = oracle::pmf_by_enumeration(n);
    const PmfTable t = pmf_table(n);
    REQUIRE(t.p.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) REQUIRE(t.p[k] == want[k]);
  }
}

TEST_CASE("pmf normalization and moments") {
  for (int n : {1, 2, 3, 7, 10, 33, 64, 100, 257, 512}) {
    const PmfTable t = pmf_table(n);
    REQUIRE(t.exact);
    CHECK(std::accumulate(t.p.begin(), t.p.end(), BigRat(0)) == 1);
    CHECK(t.mean == mean_closed(n));
    CHECK(t.variance == var_closed(n));
    // double column tracks the exact one
    for (std::size_t k = 0; k < t.p.size(); ++k)
      REQUIRE(t.pd[k] == doctest::Approx(as_d(t.p[k])).epsilon(1e-10));
  }
}

TEST_CASE("pmf beyond the exact ceiling") {
  const PmfTable t = pmf_table(kExactPmfMax + 1);
  CHECK_FALSE(t.exact);
  CHECK(t.p.empty());
  REQUIRE(t.pd.size() == static_cast<std::size_t>((kExactPmfMax + 1) / 2 + 1));
  const double total = std::accumulate(t.pd.begin(), t.pd.end(), 0.0);
  CHECK(std::abs(total - 1.0) < 1e-9);
  CHECK(t.mean_d == doctest::Approx(mean_closed_d(kExactPmfMax + 1)).epsilon(1e-9));
  CHECK(t.variance_d == doctest::Approx(var_closed_d(kExactPmfMax + 1)).epsilon(1e-7));
}

TEST_CASE("closed moments") {
  CHECK(mean_closed(1) == 0);
  CHECK(mean_closed(2) == r(1, 2));
  CHECK(mean_closed(3) == r(3, 4));
  CHECK(mean_closed(4) == r(9, 8));
  CHECK(var_closed(4) == r(23, 64));
  CHECK(rate_closed(4) == r(9, 32));
  CHECK(mean_closed_d(4) == doctest::Approx(9.0 / 8.0));
  CHECK(var_closed_d(4) == doctest::Approx(23.0 / 64.0));
  CHECK(rate_closed_d(3000) == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("rate concentrates at one third") {
  for (int n = 1; n <= 400; ++n) {
    const BigRat err = rate_closed(n) - r(1, 3);
    const BigRat bound = BigRat(4, 9 * std::max(n, 1));
    REQUIRE(abs(err) <= bound);
  }
  CHECK(std::abs(rate_closed_d(100000) - 1.0 / 3.0) <= 4.0 / (9.0 * 100000));
}

TEST_CASE("gap law") {
  CHECK_THROWS_AS(GapLaw::pmf(0), std::invalid_argument);
  CHECK(GapLaw::pmf(1) == 0);
  CHECK(GapLaw::pmf(2) == r(1, 2));
  CHECK(GapLaw::pmf(3) == r(1, 4));
  CHECK(GapLaw::pmf(9) == r(1, 256));
  BigRat total = 0, mean = 0, second = 0;
  for (int n = 2; n <= 200; ++n) {
    total += GapLaw::pmf(n);
    mean += n * GapLaw::pmf(n);
    second += BigRat(n) * n * GapLaw::pmf(n);
  }
  CHECK(std::abs(as_d(total) - 1.0) < 1e-12);
  CHECK(std::abs(as_d(mean) - GapLaw::kMean) < 1e-12);
  CHECK(std::abs(as_d(second - mean * mean) - GapLaw::kVariance) < 1e-12);
}

TEST_CASE("emission chain stationarity") {
  const double h = EmissionChain::kStationaryHold;
  const double e = EmissionChain::kStationaryEmit;
  CHECK(h + e == doctest::Approx(1.0));
  CHECK(h * EmissionChain::kP[0][0] + e * EmissionChain::kP[1][0] == doctest::Approx(h));
  CHECK(h * EmissionChain::kP[0][1] + e * EmissionChain::kP[1][1] == doctest::Approx(e));
  // mean recurrence time of the emit state is the gap mean
  CHECK(1.0 / e == doctest::Approx(GapLaw::kMean));
}

TEST_CASE("gaussian limit parameters") {
  const auto [m, v] = gaussian_limit(27);
  CHECK(m == doctest::Approx(9.0));
  CHECK(v == doctest::Approx(2.0));
  const auto [m2, v2] = gaussian_limit(1000);
  CHECK(m2 == doctest::Approx(1000.0 / 3.0));
  CHECK(v2 == doctest::Approx(2000.0 / 27.0));
  // pmf moments approach these
  const PmfTable t = pmf_table(1500);
  CHECK(std::abs(t.mean_d - t.gauss_mean) < 0.25);
  CHECK(std::abs(t.variance_d - t.gauss_var) < 0.5);
}

TEST_CASE("gaussian cdf vs quadrature") {
  for (double x : {-1.5, 0.0, 0.3, 2.0}) {
    CHECK(gaussian_cdf(x, 0.0, 1.0) ==
          doctest::Approx(oracle::normal_cdf_by_quadrature(x, 0.0, 1.0)).epsilon(1e-9));
  }
  CHECK(gaussian_cdf(333.0, 1000.0 / 3, 2000.0 / 27) ==
        doctest::Approx(oracle::normal_cdf_by_quadrature(333.0, 1000.0 / 3, 2000.0 / 27))
            .epsilon(1e-9));
  CHECK(gaussian_cdf(0.0, 0.0, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("concentration bound") {
  const TailBound b = concentration(1000, 0.1);
  // alpha = sqrt(1.5 n) gamma
  const double alpha = std::sqrt(1.5 * 1000) * 0.1;
  CHECK(b.gauss_two_sided == doctest::Approx(std::erfc(alpha / std::sqrt(2.0))).epsilon(1e-12));
  CHECK(b.envelope ==
        doctest::Approx(2.0 / (std::sqrt(2.0 * M_PI) * alpha) * std::exp(-alpha * alpha / 2))
            .epsilon(1e-12));
  CHECK(b.gauss_two_sided <= b.envelope);
  // the exact tail mass sits under the envelope at this size
  const PmfTable t = pmf_table(1000);
  const double tail = exact_tail(t, 0.1);
  CHECK(tail <= b.envelope);
  CHECK(tail > 0.0);
}

TEST_CASE("tail summation") {
  // n = 4: mean 9/8, gamma 0.2 keeps only k with |k - 9/8| > 0.225
  const PmfTable t4 = pmf_table(4);
  CHECK(exact_tail(t4, 0.2) == doctest::Approx(1.0 / 8.0 + 1.0 / 4.0));
  // gamma large enough to cover the whole support
  CHECK(exact_tail(t4, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("distance to the limit gaussian shrinks") {
  const PmfTable t10 = pmf_table(10);
  const PmfTable t100 = pmf_table(100);
  const PmfTable t1000 = pmf_table(1000);
  const double kl10 = kl_vs_gaussian(t10);
  const double kl100 = kl_vs_gaussian(t100);
  const double kl1000 = kl_vs_gaussian(t1000);
  CHECK(kl10 > kl100);
  CHECK(kl100 > kl1000);
  CHECK(kl1000 > 0.0);
  CHECK(cdf_sup_distance(t1000) < 0.02);
  CHECK(cdf_sup_distance(t100) < 0.1);
  CHECK(cdf_sup_distance(t1000) < cdf_sup_distance(t100));
}

TEST_CASE("incomplete gamma tail") {
  CHECK(gamma_q(0.5, 0.0) == doctest::Approx(1.0));
  CHECK(gamma_q(1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(gamma_q(0.5, 1.0) == doctest::Approx(std::erfc(1.0)).epsilon(1e-12));
  for (int dof : {1, 3, 8, 20}) {
    for (double x : {0.5, 4.0, 15.0}) {
      CHECK(gamma_q(dof / 2.0, x / 2.0) ==
            doctest::Approx(oracle::chi2_tail_by_quadrature(dof, x)).epsilon(1e-6));
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(pmf_table(0), std::invalid_argument);
  CHECK_THROWS_AS(mean_closed(-1), std::invalid_argument);
  CHECK_THROWS_AS(state_dist_closed(-2), std::invalid_argument);
}
