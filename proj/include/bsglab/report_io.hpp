#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "bsglab/classify.hpp"
#include "bsglab/exact.hpp"
#include "bsglab/simulate.hpp"

namespace bsglab {

std::string fmt_double(double v);  // shortest round-trip decimal

nlohmann::json to_json(const ClassReport& r);
std::string class_report_csv_header();
std::string class_report_csv_row(const ClassReport& r);

nlohmann::json pmf_summary(const PmfTable& t);
void write_pmf_csv(std::ostream& os, const PmfTable& t, bool gaussian_col);

nlohmann::json to_json(const EmpiricalDist& e, const PmfTable& t, const Chi2Result* chi2,
                       double level);
void write_sim_csv(std::ostream& os, const EmpiricalDist& e, const PmfTable& t);

}  // namespace bsglab
