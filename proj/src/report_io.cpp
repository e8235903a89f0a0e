#include "bsglab/report_io.hpp"

#include <charconv>
#include <ostream>

namespace bsglab {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json to_json(const ClassReport& r) {
  return json{
      {"degree", r.degree},
      {"period", r.period},
      {"poly", poly_str(r.degree, r.taps)},
      {"taps", r.taps},
      {"t_a", r.t_a},
      {"t_b", r.t_b},
      {"class_a_shifts", r.class_a_shifts},
      {"class_b_shifts", r.class_b_shifts},
      {"t_z", {{"num", r.t_z.num}, {"den", r.t_z.den}, {"value", r.t_z.value()}, {"str", r.t_z.str()}}},
      {"bounds", {{"t_a_ok", r.ta_bounds_ok}, {"t_b_ok", r.tb_bounds_ok}, {"t_z_ok", r.tz_bounds_ok}}},
      {"direct_checked", r.direct_checked},
      {"prediction_ok", r.prediction_ok},
      {"z_periods",
       {{"a_bsg", r.z_periods.a_bsg},
        {"a_absg", r.z_periods.a_absg},
        {"b_bsg", r.z_periods.b_bsg},
        {"b_absg", r.z_periods.b_absg}}},
      {"subperiod_found", r.subperiod_found},
  };
}

std::string class_report_csv_header() {
  return "L,poly,T_A,T_B,T_z,T_z_value,T_A_bounds_ok,T_B_bounds_ok,T_z_bounds_ok,"
         "prediction_ok,subperiod_found";
}

std::string class_report_csv_row(const ClassReport& r) {
  std::string row = std::to_string(r.degree) + "," + poly_str(r.degree, r.taps) + "," +
                    std::to_string(r.t_a) + "," + std::to_string(r.t_b) + "," + r.t_z.str() +
                    "," + fmt_double(r.t_z.value());
  for (bool b : {r.ta_bounds_ok, r.tb_bounds_ok, r.tz_bounds_ok, r.prediction_ok,
                 r.subperiod_found})
    row += b ? ",1" : ",0";
  return row;
}

json pmf_summary(const PmfTable& t) {
  double norm = 0;
  for (double v : t.pd) norm += v;
  return json{
      {"n", t.n},
      {"support_max", t.n / 2},
      {"exact", t.exact},
      {"mean", t.mean_d},
      {"variance", t.variance_d},
      {"gauss_mean", t.gauss_mean},
      {"gauss_var", t.gauss_var},
      {"kl_nats", kl_vs_gaussian(t)},
      {"cdf_sup_distance", cdf_sup_distance(t)},
      {"normalization_error", std::abs(norm - 1.0)},
  };
}

void write_pmf_csv(std::ostream& os, const PmfTable& t, bool gaussian_col) {
  os << (gaussian_col ? "k,prob,gaussian_prob\n" : "k,prob\n");
  for (std::size_t k = 0; k < t.pd.size(); ++k) {
    os << k << ',' << fmt_double(t.pd[k]);
    if (gaussian_col) {
      const double a = gaussian_cdf(double(k) - 0.5, t.gauss_mean, t.gauss_var);
      const double b = gaussian_cdf(double(k) + 0.5, t.gauss_mean, t.gauss_var);
      os << ',' << fmt_double(b - a);
    }
    os << '\n';
  }
}

json to_json(const EmpiricalDist& e, const PmfTable& t, const Chi2Result* chi2,
             double level) {
  json j{
      {"n", e.n},
      {"trials", e.trials},
      {"counts", e.counts},
      {"mean", e.mean},
      {"variance", e.variance},
      {"exact_mean", t.mean_d},
      {"exact_variance", t.variance_d},
  };
  if (chi2) {
    j["chi2"] = json{{"statistic", chi2->statistic},
                     {"dof", chi2->dof},
                     {"pooled_bins", chi2->pooled_bins},
                     {"p_value", chi2->p_value},
                     {"level", level},
                     {"pass", chi2_pass(*chi2, level)}};
  }
  return j;
}

void write_sim_csv(std::ostream& os, const EmpiricalDist& e, const PmfTable& t) {
  os << "k,count,freq,exact_prob\n";
  for (std::size_t k = 0; k < e.counts.size(); ++k) {
    os << k << ',' << e.counts[k] << ',' << fmt_double(double(e.counts[k]) / double(e.trials))
       << ',' << fmt_double(t.pd[k]) << '\n';
  }
}

}  // namespace bsglab
