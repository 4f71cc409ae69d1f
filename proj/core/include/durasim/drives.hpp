#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace durasim {

struct Money {
  double amount = 0.0;
  std::string currency = "USD";
};

/// One drive-catalog entry. Capacities in bytes, rates in bytes/second.
struct DriveSpec {
  std::string name;
  double capacity = 0.0;             ///< bytes
  double sustained_bandwidth = 0.0;  ///< interface rate, bytes/second
  /// Rate actually achieved during rebuild, when it differs from the
  /// interface rate. Used by repair_time_from_capacity when present.
  std::optional<double> effective_recovery_rate;
  double ber = 0.0;  ///< irrecoverable bit errors per bit read
  double service_life = 0.0;               ///< years
  double service_life_failure_prob = 0.0;  ///< P(visible fault within service life)
  Money unit_cost;

  double cost_per_gb() const { return unit_cost.amount / (capacity / 1e9); }
  double recovery_rate() const {
    return effective_recovery_rate.value_or(sustained_bandwidth);
  }
};

void validate(const DriveSpec& spec);

class DriveCatalog {
 public:
  static DriveCatalog from_json(const nlohmann::json& doc);
  static DriveCatalog load(const std::string& path);

  const DriveSpec* find(const std::string& name) const;
  /// Throws std::out_of_range with the missing name.
  const DriveSpec& at(const std::string& name) const;
  const std::vector<DriveSpec>& drives() const { return drives_; }

 private:
  std::vector<DriveSpec> drives_;
};

/// MTTF implied by the exponential model and the quoted in-service failure
/// probability: -(service_life * 8760) / ln(1 - p). The probability must be
/// in (0, 1); validate() rejects anything else.
double mttf_from_service_life(const DriveSpec& spec);

/// Full-rebuild time in hours: capacity over the effective recovery rate.
double repair_time_from_capacity(const DriveSpec& spec);

/// Expected irrecoverable bit errors over the drive's active lifetime:
/// ber * 8 * transfer_rate * duty_cycle * lifetime_years * 365 * 86400.
double expected_bit_errors(const DriveSpec& spec, double duty_cycle,
                           double lifetime_years, double transfer_rate);

/// Per-byte cost of a relative to b.
double cost_ratio(const DriveSpec& a, const DriveSpec& b);

}  // namespace durasim
