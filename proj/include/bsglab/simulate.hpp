#pragma once

#include <cstdint>
#include <vector>

#include "bsglab/exact.hpp"

namespace bsglab {

enum class GenKind { StateOnly, Bsg, Absg };

struct SimConfig {
  int n = 0;  // input bits per trial
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  GenKind kind = GenKind::StateOnly;
  int threads = 0;
};

struct EmpiricalDist {
  int n = 0;
  std::int64_t trials = 0;
  std::vector<std::int64_t> counts;  // index k = emissions per trial
  double mean = 0;
  double variance = 0;
};

// Counts emissions per trial over uniform random inputs. Per-trial
// substreams make the result a pure function of (n, trials, seed, kind),
// independent of the thread count.
EmpiricalDist simulate(const SimConfig& c);

struct Chi2Result {
  double statistic = 0;
  int dof = 0;
  double p_value = 0;
  int pooled_bins = 0;
};

// Goodness of fit against the exact pmf; bins with expectation below 5 are
// pooled left to right, a light leftover folds into the last bin.
Chi2Result chi2_gof(const EmpiricalDist& e, const PmfTable& t);

inline bool chi2_pass(const Chi2Result& r, double level = 0.999) {
  return r.p_value > 1.0 - level;
}

}  // namespace bsglab
