#pragma once

#include <cstdint>
#include <vector>

#include "durasim/report.hpp"
#include "durasim/scenario.hpp"

namespace durasim {

struct SimulateRunOptions {
  std::uint64_t trajectories = 10000;
  std::uint64_t master_seed = 42;
  double confidence = 0.95;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct CompareOptions {
  SimulateRunOptions sim;
  double tolerance = 0.10;  // relative MTTDL difference for a PASS
};

/// One row per sweep point: regime-selected closed-form MTTDL plus the
/// horizon loss probability.
std::vector<ReportRow> run_analytic(const Scenario& scenario);

/// One row per sweep point: empirical MTTDL with CI. Per-point seeds derive
/// from (master_seed, point index), so a fixed seed fixes the whole row set.
std::vector<ReportRow> run_simulate(const Scenario& scenario,
                                    const SimulateRunOptions& opts);

/// Joins the analytic and simulated estimates per sweep point. The analytic
/// side uses the exact (clamped) closed form, which is the one the simulated
/// process is expected to track. Verdict is PASS when the relative
/// difference is within tolerance or the simulation CI covers the analytic
/// value.
std::vector<ReportRow> run_compare(const Scenario& scenario,
                                   const CompareOptions& opts);

bool any_fail(const std::vector<ReportRow>& rows);

}  // namespace durasim
