#include "durasim/drives.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "durasim/units.hpp"

namespace durasim {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void validate(const DriveSpec& spec) {
  require(!spec.name.empty(), "drive name must be non-empty");
  require(spec.capacity >= 0.0, "capacity must be non-negative");
  require(spec.sustained_bandwidth > 0.0, "sustained_bandwidth must be positive");
  if (spec.effective_recovery_rate) {
    require(*spec.effective_recovery_rate > 0.0,
            "effective_recovery_rate must be positive");
  }
  require(spec.ber >= 0.0, "ber must be non-negative");
  require(spec.service_life > 0.0, "service_life must be positive");
  require(spec.service_life_failure_prob > 0.0 && spec.service_life_failure_prob < 1.0,
          "service_life_failure_prob must be in (0, 1)");
  require(spec.unit_cost.amount > 0.0, "unit_cost amount must be positive");
}

DriveCatalog DriveCatalog::from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) {
    throw std::invalid_argument("drive catalog must be a JSON array");
  }
  DriveCatalog cat;
  for (const auto& entry : doc) {
    DriveSpec spec;
    spec.name = entry.at("name").get<std::string>();
    spec.capacity = entry.at("capacity").get<double>();
    spec.sustained_bandwidth = entry.at("sustained_bandwidth").get<double>();
    if (entry.contains("effective_recovery_rate")) {
      spec.effective_recovery_rate = entry["effective_recovery_rate"].get<double>();
    }
    spec.ber = entry.at("ber").get<double>();
    spec.service_life = entry.at("service_life").get<double>();
    spec.service_life_failure_prob = entry.at("service_life_failure_prob").get<double>();
    const auto& cost = entry.at("unit_cost");
    spec.unit_cost.amount = cost.at("amount").get<double>();
    spec.unit_cost.currency = cost.at("currency").get<std::string>();
    validate(spec);
    cat.drives_.push_back(std::move(spec));
  }
  return cat;
}

DriveCatalog DriveCatalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open drive catalog: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("drive catalog " + path + ": " + e.what());
  }
  return from_json(doc);
}

const DriveSpec* DriveCatalog::find(const std::string& name) const {
  for (const auto& d : drives_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

const DriveSpec& DriveCatalog::at(const std::string& name) const {
  const DriveSpec* d = find(name);
  if (!d) throw std::out_of_range("drive not in catalog: " + name);
  return *d;
}

double mttf_from_service_life(const DriveSpec& spec) {
  validate(spec);
  const double p = spec.service_life_failure_prob;
  return spec.service_life * kHoursPerYear / -std::log1p(-p);
}

double repair_time_from_capacity(const DriveSpec& spec) {
  validate(spec);
  return spec.capacity / spec.recovery_rate() / 3600.0;
}

double expected_bit_errors(const DriveSpec& spec, double duty_cycle,
                           double lifetime_years, double transfer_rate) {
  if (duty_cycle < 0.0 || duty_cycle > 1.0) {
    throw std::domain_error("duty_cycle must be in [0, 1]");
  }
  return spec.ber * 8.0 * transfer_rate * duty_cycle * lifetime_years * 365.0 * 86400.0;
}

double cost_ratio(const DriveSpec& a, const DriveSpec& b) {
  validate(a);
  validate(b);
  return (a.unit_cost.amount / a.capacity) / (b.unit_cost.amount / b.capacity);
}

}  // namespace durasim
