#include "bsglab/classify.hpp"

#include <atomic>
#include <bit>

#include "bsglab/generator.hpp"
#include "bsglab/parallel.hpp"

namespace bsglab {

namespace {

// Sym codes for the hot loops: 0 Empty, 1 Zero, 2 One (same as enum Sym).
constexpr std::uint8_t kT[3][2] = {{1, 2}, {0, 1}, {2, 0}};

void run_codes(const Bit* bits, std::size_t steps, std::uint8_t* out) {
  std::uint8_t y = 0;
  for (std::size_t i = 0; i < steps; ++i) {
    y = kT[y][bits[i]];
    out[i] = y;
  }
}

void check_classifiable(const LfsrConfig& c, const ClassifyOptions& o) {
  c.validate();
  if (c.degree > o.max_degree)
    throw std::domain_error("L-too-large: exhaustive classification ceiling exceeded");
  if (!is_maximal(c.degree, c.taps))
    throw std::domain_error("not-m-sequence: taps are not maximal-length");
}

BitSeq repeated(const BitSeq& x, int copies) {
  BitSeq out;
  out.reserve(x.size() * static_cast<std::size_t>(copies));
  for (int i = 0; i < copies; ++i) out.insert(out.end(), x.begin(), x.end());
  return out;
}

StateSeq trace_from(const Bit* bits, std::size_t steps) {
  StateSeq y(steps, Sym::Empty);
  run_codes(bits, steps, reinterpret_cast<std::uint8_t*>(y.data()));
  return y;
}

}  // namespace

SeqClass classify_shift(const BitSeq& x, std::size_t k) {
  if (x.empty()) throw std::invalid_argument("empty-sequence");
  const std::size_t T = x.size();
  // necessary-condition gate: full least period, length 2^L - 1, balanced weight
  const bool len_ok = T >= 3 && std::has_single_bit(static_cast<std::uint64_t>(T) + 1);
  if (!len_ok || least_period(x) != T ||
      count_symbol<Bit>(x, 1) != (T + 1) / 2)
    throw std::domain_error("not-m-sequence: input is not one maximal period");
  k %= T;
  std::uint8_t y = 0;
  for (std::size_t i = 0; i < T; ++i) y = kT[y][x[(k + i) % T]];
  return y == 0 ? SeqClass::A : SeqClass::B;
}

ClassReport full_report(const LfsrConfig& c, const ClassifyOptions& o) {
  check_classifiable(c, o);

  ClassReport r;
  r.degree = c.degree;
  r.taps = c.taps;
  const std::uint32_t T = (1u << c.degree) - 1;
  r.period = T;

  const BitSeq x = lfsr_bits(c, T);
  const BitSeq x4 = repeated(x, 4);  // room for any shift's double-period trace

  // reference trace over two periods
  std::vector<std::uint8_t> y(2 * T);
  run_codes(x4.data(), 2 * T, y.data());
  const bool ref_is_a = (y[T - 1] == 0);

  // Every shift in the reference's class appears as an emission position of
  // the reference trace (mod T); the other class is the complement.
  std::vector<std::uint8_t> cls(T);  // 0 = A, 1 = B
  {
    std::vector<bool> mark(T, false);
    for (std::size_t j = 1; j <= 2 * static_cast<std::size_t>(T); ++j)
      if (y[j - 1] == 0) mark[j % T] = true;
    const std::uint8_t same = ref_is_a ? 0 : 1;
    const std::uint8_t other = ref_is_a ? 1 : 0;
    for (std::uint32_t k = 0; k < T; ++k) cls[k] = mark[k] ? same : other;
  }

  if (o.direct_check) {
    std::vector<std::uint8_t> direct(T);
    const Bit* base = x4.data();
    parallel_for(T, o.threads, [&](std::size_t b, std::size_t e) {
      for (std::size_t k = b; k < e; ++k) {
        std::uint8_t s = 0;
        const Bit* p = base + k;
        for (std::uint32_t i = 0; i < T; ++i) s = kT[s][p[i]];
        direct[k] = (s == 0) ? 0 : 1;
      }
    });
    r.direct_checked = true;
    r.prediction_ok = (direct == cls);
  }

  for (std::uint32_t k = 0; k < T; ++k)
    (cls[k] == 0 ? r.class_a_shifts : r.class_b_shifts).push_back(k);
  r.t_a = static_cast<std::uint32_t>(r.class_a_shifts.size());
  r.t_b = static_cast<std::uint32_t>(r.class_b_shifts.size());

  const std::int64_t ta = r.t_a, tb = r.t_b;
  r.t_z = Ratio(ta * ta + tb * tb, T);

  const std::int64_t half = std::int64_t(1) << (c.degree - 1);
  const std::int64_t c6 = ((std::int64_t(1) << c.degree) + 5) / 6;  // ceil(2^L / 6)
  r.ta_bounds_ok = (c6 <= ta) && (ta <= half - 1);
  r.tb_bounds_ok = (half <= tb) && (tb <= T - c6);
  const Ratio lo((half - 1) * (half - 1) + half * half, T);
  const Ratio hi(c6 * c6 + (T - c6) * (T - c6), T);
  r.tz_bounds_ok = (lo <= r.t_z) && (r.t_z <= hi);

  // per-class representative output periods
  const std::uint32_t ka = r.class_a_shifts.empty() ? 0 : r.class_a_shifts.front();
  const std::uint32_t kb = r.class_b_shifts.empty() ? 0 : r.class_b_shifts.front();
  if (!r.class_a_shifts.empty()) {
    const StateSeq tr = trace_from(x4.data() + ka, T);
    const BitSeq za = bsg_from_states(tr);
    const BitSeq zaa = absg_from_states(tr);
    if (za.size() != r.t_a) throw std::logic_error("class A output length mismatch");
    r.z_periods.a_bsg = static_cast<std::uint32_t>(least_period(za));
    r.z_periods.a_absg = static_cast<std::uint32_t>(least_period(zaa));
    r.subperiod_found |= r.z_periods.a_bsg < za.size() || r.z_periods.a_absg < zaa.size();
  }
  if (!r.class_b_shifts.empty()) {
    const StateSeq tr = trace_from(x4.data() + kb, 2 * T);
    const BitSeq zb = bsg_from_states(tr);
    const BitSeq zbb = absg_from_states(tr);
    if (zb.size() != r.t_b) throw std::logic_error("class B output length mismatch");
    r.z_periods.b_bsg = static_cast<std::uint32_t>(least_period(zb));
    r.z_periods.b_absg = static_cast<std::uint32_t>(least_period(zbb));
    r.subperiod_found |= r.z_periods.b_bsg < zb.size() || r.z_periods.b_absg < zbb.size();
  }

  return r;
}

bool verify_periodicity(const LfsrConfig& c, const ClassifyOptions& o) {
  check_classifiable(c, o);
  const std::uint32_t T = (1u << c.degree) - 1;
  const BitSeq x = lfsr_bits(c, T);
  const BitSeq x5 = repeated(x, 5);  // 4T window for every shift
  const Bit* base = x5.data();

  std::atomic<bool> all_ok{true};
  parallel_for(T, o.threads, [&](std::size_t b, std::size_t e) {
    std::vector<std::uint8_t> tr(4 * static_cast<std::size_t>(T));
    bool good = true;
    for (std::size_t k = b; k < e && good; ++k) {
      const Bit* p = base + k;
      run_codes(p, 2 * T, tr.data());
      if (tr[T - 1] == 0) {
        // class A: the trace repeats after T steps
        for (std::uint32_t i = 0; i < T && good; ++i) good = (tr[i] == tr[T + i]);
      } else {
        std::uint8_t s = tr[2 * T - 1];
        for (std::size_t i = 2 * T; i < 4 * static_cast<std::size_t>(T); ++i) {
          s = kT[s][p[i]];
          tr[i] = s;
        }
        // class B: period exactly 2T, and never an emission at both i and T+i
        bool differs = false;
        for (std::uint32_t i = 0; i < T && good; ++i) {
          differs |= (tr[i] != tr[T + i]);
          good = !(tr[i] == 0 && tr[T + i] == 0);
        }
        for (std::uint32_t i = 0; i < 2 * T && good; ++i) good = (tr[i] == tr[2 * T + i]);
        good = good && differs;
      }
    }
    if (!good) all_ok = false;
  });
  return all_ok;
}

bool min_null_bound_holds(const BitSeq& x) {
  const StateSeq y = run_states(x);
  const std::size_t nulls = count_symbol(y, Sym::Empty);
  return nulls >= linear_run_count(x) / 3;
}

PeriodBounds expected_period_bounds(int degree) {
  if (degree < 2) throw std::invalid_argument("degree must be at least 2");
  if (degree > kMaxDegree) throw std::domain_error("L-too-large: degree above generation ceiling");
  const std::int64_t T = (std::int64_t(1) << degree) - 1;
  const std::int64_t half = std::int64_t(1) << (degree - 1);
  const std::int64_t c6 = ((std::int64_t(1) << degree) + 5) / 6;
  PeriodBounds b;
  b.lower = Ratio((half - 1) * (half - 1) + half * half, T);
  b.upper = Ratio(c6 * c6 + (T - c6) * (T - c6), T);
  b.asym_lower = (9.0 / 18.0) * static_cast<double>(std::int64_t(1) << degree);
  b.asym_upper = (13.0 / 18.0) * static_cast<double>(std::int64_t(1) << degree);
  return b;
}

}  // namespace bsglab
