#include "bsglab/simulate.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "bsglab/generator.hpp"
#include "bsglab/parallel.hpp"
#include "bsglab/rng.hpp"

namespace bsglab {

namespace {

constexpr std::uint8_t kT[3][2] = {{1, 2}, {0, 1}, {2, 0}};

std::size_t one_trial(const SimConfig& c, std::uint64_t trial) {
  BitStream bits(trial_stream(c.seed, trial));
  if (c.kind == GenKind::StateOnly) {
    std::uint8_t y = 0;
    std::size_t h = 0;
    for (int i = 0; i < c.n; ++i) {
      y = kT[y][bits.next_bit()];
      h += (y == 0);
    }
    return h;
  }
  BitSeq x(static_cast<std::size_t>(c.n));
  for (int i = 0; i < c.n; ++i) x[static_cast<std::size_t>(i)] = bits.next_bit();
  return (c.kind == GenKind::Bsg ? bsg(x) : absg(x)).size();
}

}  // namespace

EmpiricalDist simulate(const SimConfig& c) {
  if (c.n < 1) throw std::invalid_argument("input length must be positive");
  if (c.trials < 1) throw std::invalid_argument("trials must be positive");

  EmpiricalDist e;
  e.n = c.n;
  e.trials = c.trials;
  const std::size_t K = static_cast<std::size_t>(c.n) / 2;
  e.counts.assign(K + 1, 0);

  // integer counts merge exactly, so the merge order cannot matter
  std::mutex mu;
  parallel_for(static_cast<std::size_t>(c.trials), c.threads,
               [&](std::size_t b, std::size_t en) {
                 std::vector<std::int64_t> mine(K + 1, 0);
                 for (std::size_t t = b; t < en; ++t) ++mine[one_trial(c, t)];
                 const std::lock_guard<std::mutex> g(mu);
                 for (std::size_t k = 0; k <= K; ++k) e.counts[k] += mine[k];
               });

  double m = 0, m2 = 0;
  for (std::size_t k = 0; k <= K; ++k) {
    m += double(k) * double(e.counts[k]);
    m2 += double(k) * double(k) * double(e.counts[k]);
  }
  m /= double(e.trials);
  m2 /= double(e.trials);
  e.mean = m;
  e.variance = m2 - m * m;
  return e;
}

Chi2Result chi2_gof(const EmpiricalDist& e, const PmfTable& t) {
  if (e.n != t.n) throw std::invalid_argument("distribution sizes differ");
  const std::size_t K = t.pd.size();
  if (e.counts.size() != K) throw std::invalid_argument("distribution sizes differ");

  std::vector<double> obs, exp;
  double ao = 0, ae = 0;
  for (std::size_t k = 0; k < K; ++k) {
    ao += double(e.counts[k]);
    ae += double(e.trials) * t.pd[k];
    if (ae >= 5.0) {
      obs.push_back(ao);
      exp.push_back(ae);
      ao = ae = 0;
    }
  }
  if (ae > 0) {
    if (obs.empty()) {
      obs.push_back(ao);
      exp.push_back(ae);
    } else {
      obs.back() += ao;
      exp.back() += ae;
    }
  }
  if (obs.size() < 2) throw std::domain_error("too few bins after pooling");

  Chi2Result r;
  r.pooled_bins = static_cast<int>(obs.size());
  r.dof = r.pooled_bins - 1;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const double d = obs[i] - exp[i];
    r.statistic += d * d / exp[i];
  }
  r.p_value = gamma_q(r.dof / 2.0, r.statistic / 2.0);
  return r;
}

}  // namespace bsglab
