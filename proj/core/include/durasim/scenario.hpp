#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "durasim/fault_params.hpp"

namespace durasim {

/// Scenario-file problem: carries the offending field path for context.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct SweepAxis {
  enum class Param { alpha, scrub_period, r, mdl };
  Param param = Param::alpha;
  std::vector<double> values;
};

std::string_view to_string(SweepAxis::Param p);

struct Scenario {
  std::string name;
  SystemConfig base;
  double horizon_hours = 0.0;
  std::optional<SweepAxis> sweep;
  std::vector<std::string> annotations;  ///< free-text threat notes, uninterpreted
};

/// Parses a scenario document. Times must carry an explicit unit suffix
/// (_hours or _years). A system may be given inline via "params" or by
/// drive-catalog reference via "drive"; catalog paths resolve relative to
/// base_dir. Throws ScenarioError with field context.
Scenario parse_scenario(const std::string& json_text, const std::string& base_dir);

Scenario load_scenario(const std::string& path);

/// One SystemConfig per sweep point, in sweep order; a single config when no
/// sweep is present. Sweeping mdl rewrites the scrub period to 2*mdl so the
/// analytic half-period rule and the simulator's scrub sampling stay
/// consistent.
std::vector<SystemConfig> expand_sweep(const Scenario& s);

}  // namespace durasim
