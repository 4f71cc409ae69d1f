#include "durasim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "durasim/stats.hpp"

namespace durasim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double repair_sample(double mean, RepairModel model, Xoshiro256pp& rng) {
  if (model == RepairModel::deterministic) return mean;
  return rng.exponential(mean);
}

}  // namespace

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::visible_fault: return "visible_fault";
    case EventKind::latent_fault: return "latent_fault";
    case EventKind::detection: return "detection";
    case EventKind::repair_complete: return "repair_complete";
    case EventKind::data_loss: return "data_loss";
  }
  return "unknown";
}

double detection_latency_sample(const ScrubPolicy& policy, double /*fault_time_hours*/,
                                Xoshiro256pp& rng) {
  validate(policy);
  if (policy.kind == ScrubPolicy::Kind::none) return kInf;
  return rng.uniform(0.0, policy.period_hours);
}

TrajectoryRecord simulate_trajectory(const SystemConfig& config, std::uint64_t seed) {
  validate(config);
  const FaultParams& p = config.params;
  const int r = config.r;

  Xoshiro256pp rng(seed);
  TrajectoryRecord rec;
  rec.seed = seed;

  std::vector<ReplicaState> state(r, ReplicaState::healthy);
  // Absolute time of the pending transition for non-healthy replicas
  // (repair completion or scheduled detection).
  std::vector<double> pending(r, kInf);

  const double fault_rate_base =
      (std::isfinite(p.mv) ? 1.0 / p.mv : 0.0) + (std::isfinite(p.ml) ? 1.0 / p.ml : 0.0);
  const double p_visible =
      std::isfinite(p.mv) ? (1.0 / p.mv) / fault_rate_base : 0.0;

  double now = 0.0;
  int n_healthy = r;

  while (true) {
    const double accel = (n_healthy < r) ? 1.0 / p.alpha : 1.0;
    const double fault_mean = 1.0 / (fault_rate_base * accel);

    // Competing events, scanned in replica order. Healthy replicas are
    // resampled each step (exponential, so memoryless); non-healthy ones
    // keep their scheduled absolute times.
    double best_time = kInf;
    int best_replica = -1;
    for (int i = 0; i < r; ++i) {
      double t;
      if (state[i] == ReplicaState::healthy) {
        t = now + rng.exponential(fault_mean);
      } else {
        t = pending[i];
      }
      if (t < best_time) {
        best_time = t;
        best_replica = i;
      }
    }
    if (best_replica < 0 || std::isinf(best_time)) {
      throw std::runtime_error("simulation stalled: no enabled transition");
    }

    now = best_time;
    const int i = best_replica;
    switch (state[i]) {
      case ReplicaState::healthy: {
        const bool visible = rng.uniform01() < p_visible;
        if (visible) {
          state[i] = ReplicaState::visible_fault_under_repair;
          pending[i] = now + repair_sample(p.mrv, config.repair_model, rng);
          rec.events.push_back({now, i, EventKind::visible_fault});
        } else {
          state[i] = ReplicaState::latent_fault_undetected;
          pending[i] = now + detection_latency_sample(config.scrub, now, rng);
          rec.events.push_back({now, i, EventKind::latent_fault});
        }
        --n_healthy;
        if (n_healthy == 0) {
          rec.events.push_back({now, i, EventKind::data_loss});
          rec.time_to_data_loss_hours = now;
          return rec;
        }
        break;
      }
      case ReplicaState::latent_fault_undetected:
        state[i] = ReplicaState::latent_fault_under_repair;
        pending[i] = now + repair_sample(p.mrl, config.repair_model, rng);
        rec.events.push_back({now, i, EventKind::detection});
        break;
      case ReplicaState::visible_fault_under_repair:
      case ReplicaState::latent_fault_under_repair:
        state[i] = ReplicaState::healthy;
        pending[i] = kInf;
        ++n_healthy;
        rec.events.push_back({now, i, EventKind::repair_complete});
        break;
    }
  }
}

ReliabilityEstimate SimulationResult::to_estimate() const {
  ReliabilityEstimate est;
  est.mttdl_hours = mean_hours;
  est.method = Method::simulation;
  est.ci = ci;
  return est;
}

SimulationResult estimate_mttdl(const SystemConfig& config, std::uint64_t n,
                                std::uint64_t master_seed, double confidence,
                                unsigned threads) {
  validate(config);
  if (n < 2) throw std::domain_error("need at least 2 trajectories for a CI");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::domain_error("confidence level must be in (0, 1)");
  }

  std::vector<double> outcomes(n);
  std::vector<std::array<std::uint64_t, kEventKindCount>> counts(n);

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      TrajectoryRecord rec =
          simulate_trajectory(config, derive_stream_seed(master_seed, i));
      outcomes[i] = rec.time_to_data_loss_hours;
      counts[i].fill(0);
      for (const SimEvent& e : rec.events) {
        ++counts[i][static_cast<int>(e.kind)];
      }
    }
  };

  unsigned n_threads = threads != 0 ? threads : std::thread::hardware_concurrency();
  n_threads = std::max(1u, std::min<unsigned>(n_threads, static_cast<unsigned>(n)));
  if (n_threads == 1) {
    run_range(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (n + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  // Deterministic fold in trajectory-index order.
  SimulationResult res;
  res.n_trajectories = n;
  double sum = 0.0;
  for (double x : outcomes) sum += x;
  res.mean_hours = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double x : outcomes) {
    const double d = x - res.mean_hours;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  res.standard_error_hours = sd / std::sqrt(static_cast<double>(n));
  const double z = inverse_normal_cdf(0.5 + confidence / 2.0);
  res.ci = {res.mean_hours - z * res.standard_error_hours,
            res.mean_hours + z * res.standard_error_hours, confidence};
  for (const auto& c : counts) {
    for (int k = 0; k < kEventKindCount; ++k) res.event_counts[k] += c[k];
  }
  return res;
}

void write_event_log(const TrajectoryRecord& record, std::ostream& os) {
  char buf[192];
  for (const SimEvent& e : record.events) {
    std::snprintf(buf, sizeof(buf),
                  R"({"time_hours":%.17g,"replica":%d,"kind":"%s"})", e.time_hours,
                  e.replica, std::string(to_string(e.kind)).c_str());
    os << buf << '\n';
  }
}

}  // namespace durasim
