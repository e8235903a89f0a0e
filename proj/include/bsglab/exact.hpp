#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace bsglab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binom(long n, long k);

// Distribution of the trace state after n uniform input bits.
struct StateDist {
  BigRat p_empty, p_zero, p_one;
};

StateDist state_dist_closed(int n);  // closed form, parity-split in n
StateDist state_dist_matrix(int n);  // exact counting-matrix iteration

// Exact rationals are kept up to this input length; beyond it only the
// floating column is filled (log-domain binomials).
inline constexpr int kExactPmfMax = 2048;

// Distribution of the number of emissions H over all 2^n equiprobable
// inputs of length n. Support is k = 0..floor(n/2).
struct PmfTable {
  int n = 0;
  bool exact = false;
  std::vector<BigRat> p;    // only when exact
  std::vector<double> pd;   // always
  BigRat mean, variance;    // from the exact table when available
  double mean_d = 0;
  double variance_d = 0;
  double gauss_mean = 0;  // n/3
  double gauss_var = 0;   // 2n/27
};

PmfTable pmf_table(int n);

// Closed-form moments of H and of the emission rate H/n.
BigRat mean_closed(int n);
BigRat var_closed(int n);
BigRat rate_closed(int n);
double mean_closed_d(int n);
double var_closed_d(int n);
double rate_closed_d(int n);

// Distribution of the gap between consecutive emissions: impossible at 1,
// halving tail beyond.
struct GapLaw {
  static BigRat pmf(int n);  // n >= 1; 0 at n = 1, else 2^(1-n)
  static constexpr double kMean = 3.0;
  static constexpr double kVariance = 2.0;
};

// Two-state reduction of the trace: hold (Zero/One) vs emit (Empty).
struct EmissionChain {
  // rows: from hold, from emit; columns: to hold, to emit
  static constexpr double kP[2][2] = {{0.5, 0.5}, {1.0, 0.0}};
  static constexpr double kStationaryHold = 2.0 / 3.0;
  static constexpr double kStationaryEmit = 1.0 / 3.0;
};

std::pair<double, double> gaussian_limit(int n);  // (n/3, 2n/27)
double gaussian_cdf(double x, double mean, double variance);

struct TailBound {
  double gauss_two_sided;  // 2 Q(sqrt(3n/2) gamma)
  double envelope;         // closed upper envelope of the same quantity
};

TailBound concentration(int n, double gamma);

// Pr(|H - E H| > gamma E H), summed from the table (exact when available).
double exact_tail(const PmfTable& t, double gamma);

// KL divergence (nats) from the pmf to the limit Gaussian discretized over
// unit bins on the support and renormalized.
double kl_vs_gaussian(const PmfTable& t);

// sup over k of |CDF(k) - Phi(k + 1/2)| against the limit Gaussian
double cdf_sup_distance(const PmfTable& t);

// regularized upper incomplete gamma Q(a, x); chi-square tail probability
double gamma_q(double a, double x);

}  // namespace bsglab
