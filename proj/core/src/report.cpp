#include "durasim/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace durasim {

namespace {

constexpr const char* kColumns[] = {
    "scenario",       "sweep_param",   "sweep_value",       "r",
    "mv_hours",       "ml_hours",      "mrv_hours",         "mrl_hours",
    "mdl_hours",      "alpha",         "method",            "mttdl_hours",
    "mttdl_years",    "loss_prob_horizon", "ci_low_hours",  "ci_high_hours",
    "n_trajectories", "verdict",       "sim_mttdl_hours",   "rel_diff",
    "mttdl_years_display",
};

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

/// Cell values as text, shared by both emitters.
std::vector<std::string> cells(const ReportRow& r) {
  auto num = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  };
  std::vector<std::string> out;
  out.push_back(r.scenario);
  out.push_back(r.sweep_param);
  out.push_back(num(r.sweep_value));
  out.push_back(std::to_string(r.r));
  out.push_back(format_number(r.mv_hours));
  out.push_back(format_number(r.ml_hours));
  out.push_back(format_number(r.mrv_hours));
  out.push_back(format_number(r.mrl_hours));
  out.push_back(r.mdl_hours ? format_number(*r.mdl_hours) : "undetected");
  out.push_back(format_number(r.alpha));
  out.push_back(r.method);
  out.push_back(format_number(r.mttdl_hours));
  out.push_back(format_number(r.mttdl_years));
  out.push_back(format_number(r.loss_prob_horizon));
  out.push_back(num(r.ci_low_hours));
  out.push_back(num(r.ci_high_hours));
  out.push_back(r.n_trajectories ? std::to_string(*r.n_trajectories) : std::string());
  out.push_back(r.verdict);
  out.push_back(num(r.sim_mttdl_hours));
  out.push_back(num(r.rel_diff));
  out.push_back(format_years_display(r.mttdl_years));
  return out;
}

// Columns holding free text (everything else is numeric or empty).
bool is_text_column(std::size_t i) {
  return i == 0 || i == 1 || i == 10 || i == 17 || i == 20;
}

void write_csv(const std::vector<ReportRow>& rows, std::ostream& os) {
  bool first = true;
  for (const char* col : kColumns) {
    if (!first) os << ',';
    os << col;
    first = false;
  }
  os << '\n';
  for (const ReportRow& r : rows) {
    const auto c = cells(r);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i];
    }
    os << '\n';
  }
}

void write_json(const std::vector<ReportRow>& rows, std::ostream& os) {
  os << "[\n";
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const auto c = cells(rows[ri]);
    os << "  {";
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!first) os << ',';
      first = false;
      os << '"' << kColumns[i] << "\":";
      if (c[i].empty()) {
        os << "null";
      } else if (is_text_column(i) || c[i] == "undetected" || c[i] == "inf") {
        os << '"' << json_escape(c[i]) << '"';
      } else {
        os << c[i];  // numeric text, already %.15g
      }
    }
    os << '}' << (ri + 1 < rows.size() ? ",\n" : "\n");
  }
  os << "]\n";
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format: " + name);
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string format_years_display(double years) {
  if (std::isinf(years)) return "inf";
  const double rounded = std::copysign(std::floor(std::fabs(years) * 10.0 + 0.5), years) / 10.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", rounded);
  return buf;
}

void write_report(const std::vector<ReportRow>& rows, ReportFormat format,
                  std::ostream& os) {
  if (format == ReportFormat::csv) {
    write_csv(rows, os);
  } else {
    write_json(rows, os);
  }
}

}  // namespace durasim
