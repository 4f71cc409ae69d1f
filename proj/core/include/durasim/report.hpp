#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace durasim {

/// One output row. Columns are fixed; analytic, simulation, and comparison
/// runs leave the cells they do not produce empty.
struct ReportRow {
  std::string scenario;
  std::string sweep_param;              // empty when no sweep
  std::optional<double> sweep_value;
  int r = 2;
  double mv_hours = 0.0;
  double ml_hours = 0.0;
  double mrv_hours = 0.0;
  double mrl_hours = 0.0;
  std::optional<double> mdl_hours;      // nullopt = undetected
  double alpha = 1.0;
  std::string method;
  double mttdl_hours = 0.0;
  double mttdl_years = 0.0;
  double loss_prob_horizon = 0.0;
  std::optional<double> ci_low_hours;
  std::optional<double> ci_high_hours;
  std::optional<std::uint64_t> n_trajectories;
  std::string verdict;                  // PASS/FAIL, compare runs only
  std::optional<double> sim_mttdl_hours;  // compare runs only
  std::optional<double> rel_diff;         // compare runs only
};

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(const std::string& name);

/// Writes rows in the given format. Numbers are printed with 15 significant
/// digits through the same formatter in both formats, so CSV and JSON
/// emissions of one run carry identical values.
void write_report(const std::vector<ReportRow>& rows, ReportFormat format,
                  std::ostream& os);

/// %.15g formatting used by both emitters.
std::string format_number(double v);

/// Year figure rounded half away from zero to one decimal, for the
/// human-readable summary column.
std::string format_years_display(double years);

}  // namespace durasim
