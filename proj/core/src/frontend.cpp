#include "durasim/frontend.hpp"

#include <cmath>

#include "durasim/analytic.hpp"
#include "durasim/sim.hpp"
#include "durasim/units.hpp"

namespace durasim {

namespace {

ReportRow base_row(const Scenario& s, const SystemConfig& c, std::size_t point) {
  ReportRow row;
  row.scenario = s.name;
  if (s.sweep) {
    row.sweep_param = std::string(to_string(s.sweep->param));
    row.sweep_value = s.sweep->values[point];
  }
  const FaultParams p = c.effective_params();
  row.r = c.r;
  row.mv_hours = p.mv;
  row.ml_hours = p.ml;
  row.mrv_hours = p.mrv;
  row.mrl_hours = p.mrl;
  row.mdl_hours = p.mdl;
  row.alpha = p.alpha;
  return row;
}

void fill_estimate(ReportRow& row, const ReliabilityEstimate& est, double horizon) {
  row.method = std::string(to_string(est.method));
  row.mttdl_hours = est.mttdl_hours;
  row.mttdl_years = hours_to_years(est.mttdl_hours);
  row.loss_prob_horizon = loss_probability(est, horizon);
  if (est.ci) {
    row.ci_low_hours = est.ci->low_hours;
    row.ci_high_hours = est.ci->high_hours;
  }
}

}  // namespace

std::vector<ReportRow> run_analytic(const Scenario& scenario) {
  std::vector<ReportRow> rows;
  const auto configs = expand_sweep(scenario);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    ReportRow row = base_row(scenario, configs[i], i);
    fill_estimate(row, select_regime(configs[i].effective_params()),
                  scenario.horizon_hours);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReportRow> run_simulate(const Scenario& scenario,
                                    const SimulateRunOptions& opts) {
  std::vector<ReportRow> rows;
  const auto configs = expand_sweep(scenario);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    ReportRow row = base_row(scenario, configs[i], i);
    const std::uint64_t point_seed = derive_stream_seed(opts.master_seed, i);
    const SimulationResult res = estimate_mttdl(configs[i], opts.trajectories,
                                                point_seed, opts.confidence,
                                                opts.threads);
    fill_estimate(row, res.to_estimate(), scenario.horizon_hours);
    row.n_trajectories = res.n_trajectories;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReportRow> run_compare(const Scenario& scenario,
                                   const CompareOptions& opts) {
  std::vector<ReportRow> rows;
  const auto configs = expand_sweep(scenario);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    ReportRow row = base_row(scenario, configs[i], i);
    const ReliabilityEstimate analytic = mttdl_exact(configs[i].effective_params());
    fill_estimate(row, analytic, scenario.horizon_hours);

    const std::uint64_t point_seed = derive_stream_seed(opts.sim.master_seed, i);
    const SimulationResult res =
        estimate_mttdl(configs[i], opts.sim.trajectories, point_seed,
                       opts.sim.confidence, opts.sim.threads);
    row.n_trajectories = res.n_trajectories;
    row.ci_low_hours = res.ci.low_hours;
    row.ci_high_hours = res.ci.high_hours;
    row.sim_mttdl_hours = res.mean_hours;
    const double rel =
        std::fabs(res.mean_hours - analytic.mttdl_hours) / analytic.mttdl_hours;
    row.rel_diff = rel;
    const bool ci_covers = res.ci.low_hours <= analytic.mttdl_hours &&
                           analytic.mttdl_hours <= res.ci.high_hours;
    row.verdict = (rel <= opts.tolerance || ci_covers) ? "PASS" : "FAIL";
    rows.push_back(std::move(row));
  }
  return rows;
}

bool any_fail(const std::vector<ReportRow>& rows) {
  for (const auto& r : rows) {
    if (r.verdict == "FAIL") return true;
  }
  return false;
}

}  // namespace durasim
