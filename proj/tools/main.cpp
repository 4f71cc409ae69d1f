// durasim: analytic and Monte Carlo reliability estimates for replicated
// long-term storage.
//
// Exit codes: 0 success, 1 validation/parse error, 2 comparison FAIL present.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "durasim/drives.hpp"
#include "durasim/frontend.hpp"
#include "durasim/report.hpp"
#include "durasim/scenario.hpp"
#include "durasim/units.hpp"

namespace {

struct CommonArgs {
  std::string scenario_path;
  std::string out_path;  // empty = stdout
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool scenario_required = true) {
  auto* opt = cmd->add_option("--scenario", args.scenario_path, "Scenario JSON file");
  if (scenario_required) opt->required();
  cmd->add_option("--out", args.out_path, "Output file (default: stdout)");
  cmd->add_option("--format", args.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

int emit(const std::vector<durasim::ReportRow>& rows, const CommonArgs& args) {
  const auto format = durasim::parse_report_format(args.format);
  if (args.out_path.empty()) {
    durasim::write_report(rows, format, std::cout);
  } else {
    std::ofstream out(args.out_path);
    if (!out) {
      std::cerr << "error: cannot open output file " << args.out_path << "\n";
      return 1;
    }
    durasim::write_report(rows, format, out);
  }
  return 0;
}

int show_catalog(const std::string& catalog_path, const std::string& scenario_path) {
  std::string path = catalog_path;
  if (path.empty() && !scenario_path.empty()) {
    // Resolve the catalog a drive-referencing scenario points at. Scenarios
    // with inline params have no catalog to show.
    std::cerr << "error: catalog show needs --catalog (scenario files embed "
                 "resolved parameters)\n";
    return 1;
  }
  if (path.empty()) {
    std::cerr << "error: catalog show needs --catalog <file>\n";
    return 1;
  }
  const durasim::DriveCatalog catalog = durasim::DriveCatalog::load(path);
  std::printf("%-12s %14s %12s %10s %8s %12s %10s %10s\n", "name", "capacity_gb",
              "bw_mb_s", "ber", "life_yr", "fail_prob", "cost", "cost_gb");
  for (const auto& d : catalog.drives()) {
    std::printf("%-12s %14.1f %12.1f %10.0e %8.1f %12.3f %7.2f %-3s %7.2f\n",
                d.name.c_str(), d.capacity / 1e9, d.sustained_bandwidth / 1e6, d.ber,
                d.service_life, d.service_life_failure_prob, d.unit_cost.amount,
                d.unit_cost.currency.c_str(), d.cost_per_gb());
    std::printf("  mttf %.4g h (%.1f yr), rebuild %.3f h\n",
                durasim::mttf_from_service_life(d),
                durasim::hours_to_years(durasim::mttf_from_service_life(d)),
                durasim::repair_time_from_capacity(d));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Storage reliability modeling: closed-form MTTDL and Monte Carlo "
               "fault injection for r-way replicated data"};
  app.require_subcommand(1);

  CommonArgs analytic_args;
  auto* analytic = app.add_subcommand("analytic", "Closed-form MTTDL per sweep point");
  add_common(analytic, analytic_args);

  CommonArgs sim_args;
  durasim::SimulateRunOptions sim_opts;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo MTTDL per sweep point");
  add_common(simulate, sim_args);
  simulate->add_option("--trajectories", sim_opts.trajectories, "Trajectory count")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000000}));
  simulate->add_option("--seed", sim_opts.master_seed, "Master RNG seed");
  simulate->add_option("--threads", sim_opts.threads, "Worker threads (0 = auto)");
  simulate->add_option("--confidence", sim_opts.confidence, "CI level, e.g. 0.95");

  CommonArgs cmp_args;
  durasim::CompareOptions cmp_opts;
  auto* compare =
      app.add_subcommand("compare", "Analytic vs simulation with PASS/FAIL verdicts");
  add_common(compare, cmp_args);
  compare->add_option("--trajectories", cmp_opts.sim.trajectories, "Trajectory count")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000000}));
  compare->add_option("--seed", cmp_opts.sim.master_seed, "Master RNG seed");
  compare->add_option("--threads", cmp_opts.sim.threads, "Worker threads (0 = auto)");
  compare->add_option("--confidence", cmp_opts.sim.confidence, "CI level");
  compare->add_option("--tolerance", cmp_opts.tolerance,
                      "Relative MTTDL difference accepted as PASS");

  std::string catalog_path;
  CommonArgs cat_args;
  auto* catalog = app.add_subcommand("catalog", "Drive catalog operations");
  auto* cat_show = catalog->add_subcommand("show", "Print catalog entries and "
                                                   "derived figures");
  cat_show->add_option("--catalog", catalog_path, "Drive catalog JSON file");
  add_common(cat_show, cat_args, /*scenario_required=*/false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analytic->parsed()) {
      const auto scenario = durasim::load_scenario(analytic_args.scenario_path);
      return emit(durasim::run_analytic(scenario), analytic_args);
    }
    if (simulate->parsed()) {
      const auto scenario = durasim::load_scenario(sim_args.scenario_path);
      return emit(durasim::run_simulate(scenario, sim_opts), sim_args);
    }
    if (compare->parsed()) {
      const auto scenario = durasim::load_scenario(cmp_args.scenario_path);
      const auto rows = durasim::run_compare(scenario, cmp_opts);
      const int rc = emit(rows, cmp_args);
      if (rc != 0) return rc;
      return durasim::any_fail(rows) ? 2 : 0;
    }
    if (catalog->parsed()) {
      return show_catalog(catalog_path, cat_args.scenario_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
