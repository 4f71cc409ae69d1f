#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "durasim/fault_params.hpp"

namespace durasim {

enum class Method {
  exact_eq8,
  visible_dominant_eq9,
  latent_dominant_eq10,
  long_wov_eq11,
  replicated,
  simulation,
};

std::string_view to_string(Method m);

struct ConfidenceInterval {
  double low_hours = 0.0;
  double high_hours = 0.0;
  double level = 0.0;
};

struct ReliabilityEstimate {
  double mttdl_hours = 0.0;
  Method method = Method::exact_eq8;
  std::vector<std::string> validity;  ///< human-readable precondition diagnostics
  std::optional<ConfidenceInterval> ci;  ///< populated only by simulation
};

/// Total double-fault rate per hour: the sum over first-fault types of the
/// per-replica occurrence rate times the clamped conditional window
/// probability of a second fault.
double double_fault_rate(const FaultParams& p);

/// Ground-truth closed form: reciprocal of double_fault_rate. The algebraic
/// product form agrees with this whenever no clamp engages; where clamps or
/// saturation engage, this (clamped) form is authoritative.
ReliabilityEstimate mttdl_exact(const FaultParams& p);

/// Visible-dominant regime: alpha * MV^2 / MRV.
/// Valid when {MRL+MDL, MRV} are tiny against MV and MV < ML.
ReliabilityEstimate mttdl_visible_dominant(const FaultParams& p);

/// Latent-dominant regime: alpha * ML^2 / (MRL + MDL).
/// Valid when {MRL+MDL, MRV} are tiny against ML and ML < MV.
/// Throws std::invalid_argument for undetected mdl.
ReliabilityEstimate mttdl_latent_dominant(const FaultParams& p);

/// Long-latent-window regime: alpha * MV^2 / (MRV + MV^2/ML), with the
/// latent window treated as saturated. Valid when MRV is tiny against MV,
/// MV < ML and ML < MV^2.
ReliabilityEstimate mttdl_long_wov(const FaultParams& p);

/// r-way replication with exactly-overlapping visible repair windows:
/// alpha^(r-1) * MV^r / MRV^(r-1). Uses only (MV, MRV, alpha); callers who
/// want a combined fault rate should pre-merge 1/MV' = 1/MV + 1/ML.
/// Throws std::domain_error for r < 2.
ReliabilityEstimate mttdl_replicated(const SystemConfig& c);

/// Probability of at least one data loss within the horizon, treating data
/// loss as exponential with the estimate's mean.
double loss_probability(const ReliabilityEstimate& est, double horizon_hours);

/// Evaluates the regime preconditions in order (eq9, eq10, eq11) and returns
/// the first applicable specialization, else the exact form. Window-vs-MTTF
/// "tiny" means ratio < 0.01; MTTF-vs-MTTF dominance is plain ordering with
/// a warning diagnostic when the ratio exceeds 0.1. The returned validity
/// list carries the diagnostics of all four candidates.
ReliabilityEstimate select_regime(const FaultParams& p);

/// Lower bound on plausible correlation: 10 * MRV / MV, capped at 1.
double alpha_lower_bound(const FaultParams& p);

}  // namespace durasim
