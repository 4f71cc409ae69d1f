#pragma once

#include <optional>
#include <string>
#include <vector>

namespace durasim {

/// Mean-time parameters for one replica class. All times in hours.
///
/// `mdl` is the mean latency from a latent fault's occurrence to its
/// detection. An empty optional is the distinguished "undetected" marker:
/// latent faults are never proactively found, and the latent window of
/// vulnerability saturates.
struct FaultParams {
  double mv = 0.0;   ///< mean time to visible fault
  double ml = 0.0;   ///< mean time to latent fault (may be +inf: latent faults disabled)
  double mrv = 0.0;  ///< mean time to repair a visible fault
  double mrl = 0.0;  ///< mean time to repair a latent fault
  std::optional<double> mdl;  ///< mean detection latency; nullopt = never detected
  double alpha = 1.0;         ///< correlation factor in (0, 1]; 1 = independent

  bool latent_detected() const { return mdl.has_value(); }
};

/// Throws std::invalid_argument if the hard invariants are violated:
/// mean times strictly positive, mdl positive when present, 0 < alpha <= 1.
void validate(const FaultParams& p);

/// Repair-vs-occurrence margin diagnostics. The model stays defined when
/// mrv >= mv or (mrl + mdl) >= ml (windows clamp), but a margin under 10x
/// means the small-window approximations are strained; each such case gets
/// one warning string.
std::vector<std::string> margin_warnings(const FaultParams& p);

struct ScrubPolicy {
  enum class Kind { none, periodic };
  Kind kind = Kind::none;
  double period_hours = 0.0;  // meaningful iff periodic

  static ScrubPolicy none() { return {}; }
  static ScrubPolicy periodic(double period) {
    return {Kind::periodic, period};
  }
  /// Mean detection latency implied by a periodic scrub: half the period.
  std::optional<double> implied_mdl() const {
    if (kind == Kind::periodic) return period_hours / 2.0;
    return std::nullopt;
  }
};

void validate(const ScrubPolicy& s);

enum class RepairModel { exponential, deterministic };

/// r identical replicas sharing one FaultParams. A periodic scrub policy
/// overrides params.mdl via the half-period rule.
struct SystemConfig {
  int r = 2;
  FaultParams params;
  ScrubPolicy scrub;
  RepairModel repair_model = RepairModel::exponential;

  /// Params with mdl replaced by scrub.period/2 under periodic scrubbing.
  FaultParams effective_params() const;
};

void validate(const SystemConfig& c);

}  // namespace durasim
