#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "durasim/analytic.hpp"
#include "durasim/fault_params.hpp"
#include "durasim/rng.hpp"

namespace durasim {

enum class ReplicaState {
  healthy,
  visible_fault_under_repair,
  latent_fault_undetected,
  latent_fault_under_repair,
};

enum class EventKind : int {
  visible_fault = 0,
  latent_fault = 1,
  detection = 2,
  repair_complete = 3,
  data_loss = 4,
};
inline constexpr int kEventKindCount = 5;

std::string_view to_string(EventKind k);

struct SimEvent {
  double time_hours = 0.0;
  int replica = 0;
  EventKind kind = EventKind::visible_fault;
};

/// Full event log of one trajectory, run to data loss.
struct TrajectoryRecord {
  std::uint64_t seed = 0;
  std::vector<SimEvent> events;
  double time_to_data_loss_hours = 0.0;
};

struct SimulationResult {
  std::uint64_t n_trajectories = 0;
  double mean_hours = 0.0;
  double standard_error_hours = 0.0;
  ConfidenceInterval ci;
  std::array<std::uint64_t, kEventKindCount> event_counts{};

  ReliabilityEstimate to_estimate() const;
};

/// Samples the latency from a latent fault to its detection. Periodic
/// scrubbing: uniform on [0, period), independent of the fault time
/// (memoryless scrub phase). Policy none: +inf, never detected.
double detection_latency_sample(const ScrubPolicy& policy, double fault_time_hours,
                                Xoshiro256pp& rng);

/// Runs one trajectory until all r replicas are simultaneously non-healthy.
/// Fault interarrivals are exponential at 1/MV and 1/ML per healthy replica;
/// while any replica is non-healthy every healthy replica's fault rates are
/// multiplied by 1/alpha (a constant factor, not compounded per concurrent
/// fault; compounding would break the geometric replication law). Identical
/// seeds give bit-identical trajectories.
TrajectoryRecord simulate_trajectory(const SystemConfig& config, std::uint64_t seed);

/// Runs n independent trajectories with per-trajectory seeds derived from
/// (master_seed, index). threads = 0 picks hardware concurrency. The result
/// is bit-identical regardless of the thread count: outcomes are stored by
/// trajectory index and folded in index order.
SimulationResult estimate_mttdl(const SystemConfig& config, std::uint64_t n,
                                std::uint64_t master_seed, double confidence = 0.95,
                                unsigned threads = 0);

/// Newline-delimited JSON event log, one object per event.
void write_event_log(const TrajectoryRecord& record, std::ostream& os);

}  // namespace durasim
