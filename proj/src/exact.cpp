#include "bsglab/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace bsglab {

namespace {

BigRat pow_neg_half(int n) {  // (-1/2)^n
  BigRat r(1, BigInt(1) << n);
  return (n & 1) ? -r : r;
}

double to_d(const BigRat& r) { return r.convert_to<double>(); }

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("input length must be positive");
}

}  // namespace

BigInt binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

StateDist state_dist_closed(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  StateDist d;
  const BigRat third(1, 3);
  const int m = n / 2;
  const BigRat q(1, BigInt(1) << (2 * m));  // 4^(-m)
  if (n % 2 == 0) {
    d.p_empty = third + BigRat(2, 3) * q;
    d.p_zero = third - third * q;
  } else {
    d.p_empty = third - third * q;
    d.p_zero = third + BigRat(1, 6) * q;
  }
  d.p_one = d.p_zero;
  return d;
}

StateDist state_dist_matrix(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  // columns of the step table, averaged over the input bit
  BigRat e(1), z(0), o(0);
  const BigRat half(1, 2);
  for (int i = 0; i < n; ++i) {
    const BigRat ne = (z + o) * half;  // Zero on 0, One on 1 close a block
    const BigRat nz = (e + z) * half;
    const BigRat no = (e + o) * half;
    e = ne;
    z = nz;
    o = no;
  }
  return StateDist{e, z, o};
}

PmfTable pmf_table(int n) {
  check_n(n);
  PmfTable t;
  t.n = n;
  const int K = n / 2;
  t.pd.assign(static_cast<std::size_t>(K) + 1, 0.0);
  t.gauss_mean = n / 3.0;
  t.gauss_var = 2.0 * n / 27.0;
  t.exact = (n <= kExactPmfMax);

  if (t.exact) {
    t.p.assign(static_cast<std::size_t>(K) + 1, BigRat(0));
    t.p[0] = BigRat(1, BigInt(1) << (n - 1));
    for (int k = 1; k <= K; ++k) {
      if (2 * k < n) {
        t.p[static_cast<std::size_t>(k)] =
            BigRat(binom(n - k - 1, k), BigInt(1) << (n - k - 1)) +
            BigRat(binom(n - k - 1, k - 1), BigInt(1) << (n - k));
      } else {
        t.p[static_cast<std::size_t>(k)] = BigRat(1, BigInt(1) << (n / 2));
      }
    }
    BigRat m(0), m2(0);
    for (int k = 0; k <= K; ++k) {
      t.pd[static_cast<std::size_t>(k)] = to_d(t.p[static_cast<std::size_t>(k)]);
      m += k * t.p[static_cast<std::size_t>(k)];
      m2 += BigInt(k) * k * t.p[static_cast<std::size_t>(k)];
    }
    t.mean = m;
    t.variance = m2 - m * m;
    t.mean_d = to_d(t.mean);
    t.variance_d = to_d(t.variance);
  } else {
    // log2 p(k), then exp2; accurate to ~1e-12 relative per term
    const double ln2 = std::log(2.0);
    auto log2c = [&](long a, long b) {
      return (std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0)) / ln2;
    };
    t.pd[0] = std::exp2(1.0 - n);
    for (int k = 1; k <= K; ++k) {
      double v;
      if (2 * k < n) {
        v = std::exp2(log2c(n - k - 1, k) - (n - k - 1));
        if (k - 1 <= n - k - 1) v += std::exp2(log2c(n - k - 1, k - 1) - (n - k));
      } else {
        v = std::exp2(-n / 2.0);
      }
      t.pd[static_cast<std::size_t>(k)] = v;
    }
    // two-pass central moment; E[H^2] - m^2 cancels ~4 digits at n ~ 5000
    double m = 0;
    for (int k = 0; k <= K; ++k) m += k * t.pd[static_cast<std::size_t>(k)];
    double v = 0;
    for (int k = 0; k <= K; ++k) {
      const double c = k - m;
      v += c * c * t.pd[static_cast<std::size_t>(k)];
    }
    t.mean_d = m;
    t.variance_d = v;
  }
  return t;
}

BigRat mean_closed(int n) {
  check_n(n);
  return BigRat(n, 3) - BigRat(2, 9) + BigRat(2, 9) * pow_neg_half(n);
}

BigRat var_closed(int n) {
  check_n(n);
  const BigRat s = pow_neg_half(n);
  return BigRat(2 * static_cast<long long>(n), 27) + BigRat(2, 81) +
         (BigRat(4 * static_cast<long long>(n), 27) + BigRat(2, 81)) * s -
         BigRat(4, 81) * s * s;
}

BigRat rate_closed(int n) {
  check_n(n);
  return mean_closed(n) / n;
}

double mean_closed_d(int n) {
  check_n(n);
  const double s = (n & 1 ? -1.0 : 1.0) * std::exp2(-double(n));
  return n / 3.0 - 2.0 / 9.0 + (2.0 / 9.0) * s;
}

double var_closed_d(int n) {
  check_n(n);
  const double s = (n & 1 ? -1.0 : 1.0) * std::exp2(-double(n));
  return 2.0 * n / 27.0 + 2.0 / 81.0 + (4.0 * n / 27.0 + 2.0 / 81.0) * s -
         (4.0 / 81.0) * s * s;
}

double rate_closed_d(int n) { return mean_closed_d(n) / n; }

BigRat GapLaw::pmf(int n) {
  if (n < 1) throw std::invalid_argument("gap must be positive");
  if (n < 2) return BigRat(0);
  return BigRat(1, BigInt(1) << (n - 1));
}

std::pair<double, double> gaussian_limit(int n) {
  check_n(n);
  return {n / 3.0, 2.0 * n / 27.0};
}

double gaussian_cdf(double x, double mean, double variance) {
  if (!(variance > 0)) throw std::domain_error("variance must be positive");
  return 0.5 * std::erfc((mean - x) / std::sqrt(2.0 * variance));
}

TailBound concentration(int n, double gamma) {
  check_n(n);
  if (!(gamma > 0)) throw std::domain_error("gamma must be positive");
  const double alpha = std::sqrt(1.5 * n) * gamma;
  TailBound b;
  b.gauss_two_sided = std::erfc(alpha / std::sqrt(2.0));  // = 2 Q(alpha)
  b.envelope = 2.0 / (std::sqrt(2.0 * 3.14159265358979323846) * alpha) *
               std::exp(-0.5 * alpha * alpha);
  return b;
}

double exact_tail(const PmfTable& t, double gamma) {
  if (!(gamma > 0)) throw std::domain_error("gamma must be positive");
  if (t.exact) {
    const BigRat g(gamma);  // binary fraction, exact
    const BigRat lo = t.mean * (1 - g);
    const BigRat hi = t.mean * (1 + g);
    BigRat s(0);
    for (std::size_t k = 0; k < t.p.size(); ++k) {
      const BigRat kk(static_cast<long>(k));
      if (kk < lo || kk > hi) s += t.p[k];
    }
    return to_d(s);
  }
  const double lo = t.mean_d * (1 - gamma);
  const double hi = t.mean_d * (1 + gamma);
  double s = 0;
  for (std::size_t k = 0; k < t.pd.size(); ++k)
    if (double(k) < lo || double(k) > hi) s += t.pd[k];
  return s;
}

double kl_vs_gaussian(const PmfTable& t) {
  // unit-bin Gaussian masses over the support, renormalized
  std::vector<double> q(t.pd.size(), 0.0);
  double z = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double a = gaussian_cdf(double(k) - 0.5, t.gauss_mean, t.gauss_var);
    const double b = gaussian_cdf(double(k) + 0.5, t.gauss_mean, t.gauss_var);
    q[k] = b > a ? b - a : 0.0;
    z += q[k];
  }
  double d = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (t.pd[k] <= 0.0 || q[k] <= 0.0) continue;  // negligible-mass bins
    d += t.pd[k] * std::log(t.pd[k] * z / q[k]);
  }
  return d;
}

double cdf_sup_distance(const PmfTable& t) {
  double cum = 0, worst = 0;
  for (std::size_t k = 0; k < t.pd.size(); ++k) {
    cum += t.pd[k];
    const double g = gaussian_cdf(double(k) + 0.5, t.gauss_mean, t.gauss_var);
    worst = std::max(worst, std::abs(cum - g));
  }
  return worst;
}

double gamma_q(double a, double x) {
  if (!(a > 0) || x < 0) throw std::domain_error("gamma_q domain");
  if (x == 0) return 1.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    // series for the lower function, complemented
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 1000; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - lg);
  }
  // Lentz continued fraction for the upper function
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace bsglab
