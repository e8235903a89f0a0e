// Python bindings. Structured results cross as JSON strings; the package
// wrapper in python/bsglab/__init__.py parses them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>
#include <string>

#include "bsglab/classify.hpp"
#include "bsglab/exact.hpp"
#include "bsglab/generator.hpp"
#include "bsglab/lfsr.hpp"
#include "bsglab/report_io.hpp"
#include "bsglab/simulate.hpp"

namespace py = pybind11;
using namespace bsglab;
using nlohmann::json;

namespace {

LfsrConfig config_from(const std::string& poly, const std::string& seed) {
  const Poly p = parse_poly(poly);
  LfsrConfig c;
  c.degree = p.degree;
  c.taps = p.taps;
  if (seed.empty()) {
    c.seed.assign(static_cast<std::size_t>(p.degree), 0);
    c.seed[0] = 1;
  } else {
    c.seed = parse_bits(seed);
  }
  return c;
}

json ratio_json(const Ratio& r) {
  return {{"num", r.num}, {"den", r.den}, {"str", r.str()}, {"value", r.value()}};
}

json bigrat_json(const BigRat& r) {
  std::ostringstream os;
  os << r;
  return {{"str", os.str()}, {"value", r.convert_to<double>()}};
}

GenKind kind_from(const std::string& name) {
  if (name == "state") return GenKind::StateOnly;
  if (name == "bsg") return GenKind::Bsg;
  if (name == "absg") return GenKind::Absg;
  throw std::invalid_argument("kind must be 'state', 'bsg', or 'absg'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bit-search keystream generator laboratory (C++ core)";
  m.attr("__version__") = BSGLAB_VERSION;

  m.def(
      "bsg", [](const std::string& bits) { return to_string(bsg(parse_bits(bits))); },
      py::arg("bits"), "BSG keystream of a 0/1 string");
  m.def(
      "absg", [](const std::string& bits) { return to_string(absg(parse_bits(bits))); },
      py::arg("bits"), "ABSG keystream of a 0/1 string");
  m.def(
      "state_trace",
      [](const std::string& bits) { return to_string(run_states(parse_bits(bits))); },
      py::arg("bits"), "search-state sequence; '-' marks an emission");

  m.def(
      "lfsr_bits",
      [](const std::string& poly, std::size_t n, const std::string& seed) {
        return to_string(lfsr_bits(config_from(poly, seed), n));
      },
      py::arg("poly"), py::arg("n"), py::arg("seed") = "",
      "n output bits of the register; default seed 100...0");
  m.def("is_maximal", &is_maximal, py::arg("degree"), py::arg("taps"));
  m.def("primitive_taps", &primitive_taps, py::arg("degree"));
  m.def("all_primitive_taps", &all_primitive_taps, py::arg("degree"));
  m.def("poly_str", &poly_str, py::arg("degree"), py::arg("taps"));

  m.def(
      "classify_json",
      [](const std::string& poly, bool direct_check, int max_degree, int threads) {
        ClassifyOptions o;
        o.direct_check = direct_check;
        o.max_degree = max_degree;
        o.threads = threads;
        return to_json(full_report(config_from(poly, ""), o)).dump();
      },
      py::arg("poly"), py::arg("direct_check") = true, py::arg("max_degree") = 16,
      py::arg("threads") = 0, "shift classes and periods of an m-sequence, JSON text");
  m.def(
      "period_bounds_json",
      [](int degree) {
        const PeriodBounds b = expected_period_bounds(degree);
        json d{{"degree", degree},
               {"lower", ratio_json(b.lower)},
               {"upper", ratio_json(b.upper)},
               {"asym_lower", b.asym_lower},
               {"asym_upper", b.asym_upper}};
        return d.dump();
      },
      py::arg("degree"), "window for the mean output period, JSON text");

  m.def(
      "state_dist_json",
      [](int n) {
        const StateDist d = state_dist_closed(n);
        json j{{"n", n},
               {"p_empty", bigrat_json(d.p_empty)},
               {"p_zero", bigrat_json(d.p_zero)},
               {"p_one", bigrat_json(d.p_one)}};
        return j.dump();
      },
      py::arg("n"), "exact state distribution after n fair input bits, JSON text");
  m.def(
      "pmf_json", [](int n) { return pmf_summary(pmf_table(n)).dump(); }, py::arg("n"),
      "summary of the emission-count law at input length n, JSON text");
  m.def(
      "pmf_probs", [](int n) { return pmf_table(n).pd; }, py::arg("n"),
      "P(H = k) for k = 0..floor(n/2) as floats");
  m.def("mean", &mean_closed_d, py::arg("n"), "E[H] closed form");
  m.def("variance", &var_closed_d, py::arg("n"), "Var[H] closed form");
  m.def("rate", &rate_closed_d, py::arg("n"), "E[H]/n closed form");
  m.def(
      "gap_pmf", [](int n) { return GapLaw::pmf(n).convert_to<double>(); }, py::arg("n"),
      "law of the gap between consecutive emissions");

  m.def(
      "simulate_json",
      [](int n, std::int64_t trials, std::uint64_t seed, const std::string& kind, bool chi2,
         double level, int threads) {
        SimConfig c;
        c.n = n;
        c.trials = trials;
        c.seed = seed;
        c.kind = kind_from(kind);
        c.threads = threads;
        const EmpiricalDist e = simulate(c);
        const PmfTable t = pmf_table(n);
        if (chi2) {
          const Chi2Result r = chi2_gof(e, t);
          return to_json(e, t, &r, level).dump();
        }
        return to_json(e, t, nullptr, level).dump();
      },
      py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("kind") = "state",
      py::arg("chi2") = true, py::arg("level") = 0.999, py::arg("threads") = 0,
      "Monte Carlo emission counts with optional goodness-of-fit, JSON text");
}
