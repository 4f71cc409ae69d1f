#include "durasim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "durasim/drives.hpp"
#include "durasim/units.hpp"

namespace durasim {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ScenarioError(path + "." + key, "unknown key");
  }
}

double get_number(const json& obj, const char* key, const std::string& path) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ScenarioError(path + "." + key, "expected a number");
  return v.get<double>();
}

/// Reads a duration given as either <stem>_hours or <stem>_years. Units are
/// always explicit; giving both is an error.
std::optional<double> read_time(const json& obj, const std::string& stem,
                                const std::string& path) {
  const std::string hours_key = stem + "_hours";
  const std::string years_key = stem + "_years";
  const bool has_hours = obj.contains(hours_key);
  const bool has_years = obj.contains(years_key);
  if (has_hours && has_years) {
    throw ScenarioError(path + "." + stem, "give exactly one of _hours or _years");
  }
  if (has_hours) return get_number(obj, hours_key.c_str(), path);
  if (has_years) return years_to_hours(get_number(obj, years_key.c_str(), path));
  return std::nullopt;
}

double require_time(const json& obj, const std::string& stem, const std::string& path) {
  auto t = read_time(obj, stem, path);
  if (!t) throw ScenarioError(path + "." + stem, "missing (need _hours or _years)");
  return *t;
}

FaultParams parse_inline_params(const json& obj, const std::string& path) {
  check_keys(obj, path,
             {"mv_hours", "mv_years", "ml_hours", "ml_years", "ml", "mrv_hours",
              "mrv_years", "mrl_hours", "mrl_years", "mdl_hours", "mdl_years", "mdl",
              "alpha"});
  FaultParams p;
  p.mv = require_time(obj, "mv", path);
  if (obj.contains("ml") && obj["ml"] == "disabled") {
    p.ml = std::numeric_limits<double>::infinity();
  } else {
    p.ml = require_time(obj, "ml", path);
  }
  p.mrv = require_time(obj, "mrv", path);
  p.mrl = require_time(obj, "mrl", path);
  if (obj.contains("mdl")) {
    if (obj["mdl"] != "undetected") {
      throw ScenarioError(path + ".mdl", "expected \"undetected\" or mdl_hours/_years");
    }
    p.mdl = std::nullopt;
  } else {
    p.mdl = read_time(obj, "mdl", path);  // absent = undetected (unless scrubbed)
  }
  p.alpha = obj.contains("alpha") ? get_number(obj, "alpha", path) : 1.0;
  return p;
}

ScrubPolicy parse_scrub(const json& obj, const std::string& path) {
  check_keys(obj, path, {"kind", "period_hours", "period_years"});
  const std::string kind = obj.at("kind").get<std::string>();
  if (kind == "none") return ScrubPolicy::none();
  if (kind == "periodic") return ScrubPolicy::periodic(require_time(obj, "period", path));
  throw ScenarioError(path + ".kind", "expected \"none\" or \"periodic\"");
}

std::string join_path(const std::string& base_dir, const std::string& rel) {
  if (rel.empty() || rel.front() == '/' || base_dir.empty()) return rel;
  return base_dir + "/" + rel;
}

SystemConfig parse_system(const json& obj, const std::string& path,
                          const std::string& base_dir) {
  check_keys(obj, path, {"r", "params", "drive", "scrub", "alpha", "repair_model"});
  SystemConfig c;
  if (obj.contains("r")) {
    const auto& rv = obj.at("r");
    if (!rv.is_number_integer() || rv.get<long long>() < 2) {
      throw ScenarioError(path + ".r", "replication degree must be an integer >= 2");
    }
    c.r = rv.get<int>();
  }
  if (obj.contains("scrub")) c.scrub = parse_scrub(obj["scrub"], path + ".scrub");

  const bool has_params = obj.contains("params");
  const bool has_drive = obj.contains("drive");
  if (has_params == has_drive) {
    throw ScenarioError(path, "give exactly one of \"params\" or \"drive\"");
  }
  if (has_params) {
    if (obj.contains("alpha")) {
      throw ScenarioError(path + ".alpha", "alpha belongs inside \"params\"");
    }
    c.params = parse_inline_params(obj["params"], path + ".params");
  } else {
    const json& dr = obj["drive"];
    check_keys(dr, path + ".drive", {"catalog", "name", "latent_fault_multiple"});
    const std::string catalog_path =
        join_path(base_dir, dr.at("catalog").get<std::string>());
    DriveCatalog catalog = DriveCatalog::load(catalog_path);
    const std::string name = dr.at("name").get<std::string>();
    const DriveSpec* spec = catalog.find(name);
    if (!spec) {
      throw ScenarioError(path + ".drive.name",
                          "drive \"" + name + "\" not found in " + catalog_path);
    }
    const double multiple = dr.contains("latent_fault_multiple")
                                ? get_number(dr, "latent_fault_multiple", path + ".drive")
                                : 5.0;
    if (multiple <= 0.0) {
      throw ScenarioError(path + ".drive.latent_fault_multiple", "must be positive");
    }
    c.params.mv = mttf_from_service_life(*spec);
    c.params.ml = c.params.mv / multiple;
    c.params.mrv = c.params.mrl = repair_time_from_capacity(*spec);
    c.params.mdl = std::nullopt;
    c.params.alpha = obj.contains("alpha") ? get_number(obj, "alpha", path) : 1.0;
  }
  if (obj.contains("repair_model")) {
    const std::string m = obj["repair_model"].get<std::string>();
    if (m == "exponential") {
      c.repair_model = RepairModel::exponential;
    } else if (m == "deterministic") {
      c.repair_model = RepairModel::deterministic;
    } else {
      throw ScenarioError(path + ".repair_model",
                          "expected \"exponential\" or \"deterministic\"");
    }
  }
  try {
    validate(c);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(path, e.what());
  }
  return c;
}

SweepAxis parse_sweep(const json& obj, const std::string& path) {
  check_keys(obj, path, {"parameter", "values"});
  SweepAxis axis;
  const std::string param = obj.at("parameter").get<std::string>();
  if (param == "alpha") {
    axis.param = SweepAxis::Param::alpha;
  } else if (param == "scrub_period") {
    axis.param = SweepAxis::Param::scrub_period;
  } else if (param == "r") {
    axis.param = SweepAxis::Param::r;
  } else if (param == "mdl") {
    axis.param = SweepAxis::Param::mdl;
  } else {
    throw ScenarioError(path + ".parameter",
                        "expected one of alpha, scrub_period, r, mdl");
  }
  const auto& values = obj.at("values");
  if (!values.is_array() || values.empty()) {
    throw ScenarioError(path + ".values", "expected a non-empty array");
  }
  for (const auto& v : values) {
    if (!v.is_number()) throw ScenarioError(path + ".values", "expected numbers");
    axis.values.push_back(v.get<double>());
  }
  return axis;
}

}  // namespace

std::string_view to_string(SweepAxis::Param p) {
  switch (p) {
    case SweepAxis::Param::alpha: return "alpha";
    case SweepAxis::Param::scrub_period: return "scrub_period";
    case SweepAxis::Param::r: return "r";
    case SweepAxis::Param::mdl: return "mdl";
  }
  return "unknown";
}

Scenario parse_scenario(const std::string& json_text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("document", e.what());
  }
  if (!doc.is_object()) throw ScenarioError("document", "expected a JSON object");
  check_keys(doc, "scenario",
             {"name", "system", "horizon_hours", "horizon_years", "sweep",
              "annotations"});

  Scenario s;
  try {
    s.name = doc.at("name").get<std::string>();
  } catch (const json::exception&) {
    throw ScenarioError("scenario.name", "missing or not a string");
  }
  if (!doc.contains("system")) throw ScenarioError("scenario.system", "missing");
  s.base = parse_system(doc["system"], "scenario.system", base_dir);
  s.horizon_hours = require_time(doc, "horizon", "scenario");
  if (s.horizon_hours < 0.0) throw ScenarioError("scenario.horizon", "must be >= 0");
  if (doc.contains("sweep")) s.sweep = parse_sweep(doc["sweep"], "scenario.sweep");
  if (doc.contains("annotations")) {
    for (const auto& a : doc["annotations"]) {
      if (!a.is_string()) throw ScenarioError("scenario.annotations", "expected strings");
      s.annotations.push_back(a.get<std::string>());
    }
  }

  // Validate every sweep point up front, before any run.
  expand_sweep(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path, "cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto slash = path.find_last_of('/');
  const std::string base_dir = slash == std::string::npos ? "" : path.substr(0, slash);
  return parse_scenario(buf.str(), base_dir);
}

std::vector<SystemConfig> expand_sweep(const Scenario& s) {
  std::vector<SystemConfig> out;
  if (!s.sweep) {
    out.push_back(s.base);
    return out;
  }
  for (std::size_t i = 0; i < s.sweep->values.size(); ++i) {
    const double v = s.sweep->values[i];
    SystemConfig c = s.base;
    switch (s.sweep->param) {
      case SweepAxis::Param::alpha:
        c.params.alpha = v;
        break;
      case SweepAxis::Param::scrub_period:
        c.scrub = ScrubPolicy::periodic(v);
        break;
      case SweepAxis::Param::r:
        if (v != std::floor(v)) {
          throw ScenarioError("scenario.sweep.values", "r values must be integers");
        }
        c.r = static_cast<int>(v);
        break;
      case SweepAxis::Param::mdl:
        // Expressed as an equivalent scrub period so the simulator's
        // detection sampling matches the analytic half-period rule.
        c.scrub = ScrubPolicy::periodic(2.0 * v);
        break;
    }
    try {
      validate(c);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError("scenario.sweep.values[" + std::to_string(i) + "]", e.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace durasim
