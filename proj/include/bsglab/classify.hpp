#pragma once

#include <cstdint>
#include <vector>

#include "bsglab/lfsr.hpp"
#include "bsglab/ratio.hpp"
#include "bsglab/seq.hpp"

namespace bsglab {

// Feeding one period of an m-sequence splits its T cyclic shifts into two
// classes by the trace state after T steps: class A traces repeat with
// period T, class B traces with period 2T.
enum class SeqClass : std::uint8_t { A, B };

struct ZPeriods {
  std::uint32_t a_bsg = 0, a_absg = 0;  // least output periods, class A representative
  std::uint32_t b_bsg = 0, b_absg = 0;
};

struct ClassReport {
  int degree = 0;
  std::uint32_t period = 0;  // T = 2^degree - 1
  std::vector<int> taps;
  std::uint32_t t_a = 0;  // class sizes; equal to the per-class output lengths
  std::uint32_t t_b = 0;
  std::vector<std::uint32_t> class_a_shifts;
  std::vector<std::uint32_t> class_b_shifts;
  Ratio t_z;  // (t_a^2 + t_b^2) / T, the class-size-weighted mean output period
  bool ta_bounds_ok = false;
  bool tb_bounds_ok = false;
  bool tz_bounds_ok = false;
  bool direct_checked = false;  // per-shift classification ran
  bool prediction_ok = false;   // it matched the emission-position prediction
  ZPeriods z_periods;
  bool subperiod_found = false;  // some per-class output has a proper subperiod
};

struct ClassifyOptions {
  int max_degree = 16;       // exhaustive classification ceiling
  bool direct_check = true;  // run the O(T^2) per-shift classification
  int threads = 0;           // 0 = all cores
};

// Class of the k-th cyclic shift of one m-sequence period.
SeqClass classify_shift(const BitSeq& period_bits, std::size_t k);

// Classifies all T shifts. The class lists come from the emission positions
// of a single reference trace; with direct_check every shift is also
// simulated independently and compared.
ClassReport full_report(const LfsrConfig& c, const ClassifyOptions& o = {});

// Simulates every shift long enough to confirm its trace period: class A
// repeats after T steps, class B after 2T but not T and never emits at both
// i and T+i.
bool verify_periodicity(const LfsrConfig& c, const ClassifyOptions& o = {});

// Emission count of a trace is at least floor(linear_runs / 3).
bool min_null_bound_holds(const BitSeq& x);

struct PeriodBounds {
  Ratio lower, upper;                 // exact bounds on the mean output period
  double asym_lower = 0, asym_upper = 0;  // (9/18) 2^L and (13/18) 2^L
};

PeriodBounds expected_period_bounds(int degree);

}  // namespace bsglab
