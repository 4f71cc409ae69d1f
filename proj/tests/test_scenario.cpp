#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "durasim/frontend.hpp"
#include "durasim/report.hpp"
#include "durasim/scenario.hpp"
#include "durasim/units.hpp"

using namespace durasim;

namespace {

std::string scenarios_dir() {
  return std::string(DURASIM_SOURCE_DIR) + "/scenarios";
}

const char* kMinimal = R"({
  "name": "t",
  "system": {
    "r": 2,
    "params": {
      "mv_hours": 1.4e6, "ml_hours": 2.8e5,
      "mrv_hours": 0.3333333333333333, "mrl_hours": 0.3333333333333333,
      "alpha": 1.0
    },
    "scrub": {"kind": "periodic", "period_hours": 2920}
  },
  "horizon_years": 50
})";

Scenario minimal() { return parse_scenario(kMinimal, ""); }

std::string patched(const char* from, const char* to) {
  std::string s = kMinimal;
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, std::string(from).size(), to);
  return s;
}

}  // namespace

TEST_CASE("minimal scenario parses with the expected fields") {
  const Scenario s = minimal();
  CHECK(s.name == "t");
  CHECK(s.base.r == 2);
  CHECK(s.base.params.mv == 1.4e6);
  CHECK(s.base.scrub.kind == ScrubPolicy::Kind::periodic);
  CHECK(s.horizon_hours == 50.0 * kHoursPerYear);
  CHECK(!s.sweep.has_value());
  CHECK(s.base.effective_params().mdl == 1460.0);
}

TEST_CASE("parse errors carry field context") {
  auto field_of = [](const std::string& text) {
    try {
      parse_scenario(text, "");
    } catch (const ScenarioError& e) {
      return e.field();
    }
    return std::string("(no error)");
  };

  CHECK(field_of("{ not json") == "document");
  CHECK(field_of(patched("\"horizon_years\": 50", "\"horizon_years\": 50, \"bogus\": 1")) ==
        "scenario.bogus");
  CHECK(field_of(patched("\"mv_hours\": 1.4e6,",
                         "\"mv_hours\": 1.4e6, \"mv_years\": 160,")) ==
        "scenario.system.params.mv");
  CHECK(field_of(patched("\"mv_hours\": 1.4e6,", "")) ==
        "scenario.system.params.mv");
  CHECK(field_of(patched("\"horizon_years\": 50", "\"horizon_hours\": -1")) ==
        "scenario.horizon");
  CHECK(field_of(patched("\"r\": 2", "\"r\": 1")) == "scenario.system.r");
  CHECK(field_of(patched("\"kind\": \"periodic\"", "\"kind\": \"weekly\"")) ==
        "scenario.system.scrub.kind");

  // Inline parameters and a catalog reference are mutually exclusive.
  const std::string both = patched(
      "\"params\": {",
      "\"drive\": {\"catalog\": \"x.json\", \"name\": \"y\"}, \"params\": {");
  CHECK(field_of(both) == "scenario.system");

  // A missing catalog or drive fails at parse time, before any run.
  const std::string sys = R"({
    "name": "d",
    "system": {"r": 2, "drive": {"catalog": "data/drives.json", "name": "Nope"}},
    "horizon_years": 1
  })";
  bool threw = false;
  try {
    parse_scenario(sys, DURASIM_SOURCE_DIR);
  } catch (const ScenarioError& e) {
    threw = true;
    CHECK(std::string(e.what()).find("Nope") != std::string::npos);
    CHECK(e.field() == "scenario.system.drive.name");
  }
  CHECK(threw);
}

TEST_CASE("special parameter spellings") {
  const Scenario und =
      parse_scenario(patched("\"alpha\": 1.0", "\"alpha\": 1.0, \"mdl\": \"undetected\""), "");
  CHECK(!und.base.params.mdl.has_value());

  const char* text = R"({
    "name": "nl",
    "system": {
      "r": 2,
      "params": {"mv_hours": 1000, "ml": "disabled", "mrv_hours": 10,
                 "mrl_hours": 10, "alpha": 0.1}
    },
    "horizon_years": 1
  })";
  const Scenario s = parse_scenario(text, "");
  CHECK(std::isinf(s.base.params.ml));
  CHECK(s.base.params.alpha == 0.1);
}

TEST_CASE("drive-backed system resolves against the shipped catalog") {
  const Scenario s =
      load_scenario(scenarios_dir() + "/cheetah_mirror.json");
  CHECK(s.base.params.mv == doctest::Approx(1.43798e6).epsilon(1e-4));
  CHECK(s.base.params.ml == doctest::Approx(s.base.params.mv / 5.0));
  CHECK(s.base.params.mrv == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
  CHECK(s.base.params.mrl == s.base.params.mrv);
}

TEST_CASE("sweep expansion preserves order and rewrites the right knob") {
  Scenario s = minimal();
  s.sweep = SweepAxis{SweepAxis::Param::alpha, {1.0, 0.5, 0.1}};
  auto configs = expand_sweep(s);
  REQUIRE(configs.size() == 3);
  CHECK(configs[0].params.alpha == 1.0);
  CHECK(configs[1].params.alpha == 0.5);
  CHECK(configs[2].params.alpha == 0.1);

  s.sweep = SweepAxis{SweepAxis::Param::mdl, {100.0, 700.0}};
  configs = expand_sweep(s);
  CHECK(configs[0].scrub.period_hours == 200.0);
  CHECK(configs[1].scrub.period_hours == 1400.0);
  CHECK(configs[0].effective_params().mdl == 100.0);

  s.sweep = SweepAxis{SweepAxis::Param::scrub_period, {8760.0}};
  configs = expand_sweep(s);
  CHECK(configs[0].effective_params().mdl == 4380.0);

  s.sweep = SweepAxis{SweepAxis::Param::r, {2.0, 3.0}};
  configs = expand_sweep(s);
  CHECK(configs[1].r == 3);
  s.sweep = SweepAxis{SweepAxis::Param::r, {2.5}};
  CHECK_THROWS_AS(expand_sweep(s), ScenarioError);
  s.sweep = SweepAxis{SweepAxis::Param::alpha, {2.0}};
  CHECK_THROWS_AS(expand_sweep(s), ScenarioError);
}

TEST_CASE("analytic runs reproduce the reference mirror figures") {
  const auto no_scrub =
      run_analytic(load_scenario(scenarios_dir() + "/mirror_no_scrub.json"));
  REQUIRE(no_scrub.size() == 1);
  CHECK(format_years_display(no_scrub[0].mttdl_years) == "32.0");
  CHECK(no_scrub[0].loss_prob_horizon == doctest::Approx(0.79).epsilon(2e-3));

  const auto scrubbed =
      run_analytic(load_scenario(scenarios_dir() + "/mirror_scrubbed.json"));
  REQUIRE(scrubbed.size() == 1);
  CHECK(format_years_display(scrubbed[0].mttdl_years) == "6128.6");
  CHECK(scrubbed[0].loss_prob_horizon == doctest::Approx(0.008).epsilon(0.03));
  CHECK(scrubbed[0].mdl_hours == 1460.0);

  const auto sweep = run_analytic(
      load_scenario(scenarios_dir() + "/mirror_scrubbed_alpha_sweep.json"));
  REQUIRE(sweep.size() == 2);
  CHECK(sweep[0].sweep_param == "alpha");
  CHECK(sweep[1].sweep_value == 0.1);
  CHECK(format_years_display(sweep[1].mttdl_years) == "612.9");
  CHECK(sweep[1].loss_prob_horizon == doctest::Approx(0.078).epsilon(0.01));

  const auto wide = run_analytic(
      load_scenario(scenarios_dir() + "/mirror_long_latent_window.json"));
  REQUIRE(wide.size() == 1);
  CHECK(format_years_display(wide[0].mttdl_years) == "159.8");
  CHECK(wide[0].loss_prob_horizon == doctest::Approx(0.268).epsilon(0.005));
}

TEST_CASE("simulate runs are reproducible for a fixed master seed") {
  const Scenario s =
      load_scenario(scenarios_dir() + "/replication_sweep.json");
  SimulateRunOptions opts;
  opts.trajectories = 500;
  opts.master_seed = 2024;
  const auto a = run_simulate(s, opts);
  const auto b = run_simulate(s, opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].mttdl_hours == b[i].mttdl_hours);
    CHECK(a[i].ci_low_hours == b[i].ci_low_hours);
    CHECK(a[i].n_trajectories == 500);
    CHECK(a[i].method == "simulation");
  }
  opts.master_seed = 2025;
  const auto c = run_simulate(s, opts);
  CHECK(c[0].mttdl_hours != a[0].mttdl_hours);
}

TEST_CASE("compare verdicts respond to the tolerance") {
  const char* text = R"({
    "name": "cmp",
    "system": {
      "r": 2,
      "params": {"mv_hours": 10000, "ml": "disabled", "mrv_hours": 1e30,
                 "mrl_hours": 1, "alpha": 1.0}
    },
    "horizon_years": 10
  })";
  // No repair, no latent faults: closed form and process agree to O(MRV/MV),
  // apart from the 1.5x order-statistics offset absorbed by a loose tolerance.
  const Scenario s = parse_scenario(text, "");
  CompareOptions opts;
  opts.sim.trajectories = 2000;
  opts.sim.master_seed = 9;
  opts.tolerance = 10.0;
  auto rows = run_compare(s, opts);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].verdict == "PASS");
  CHECK(!any_fail(rows));
  CHECK(rows[0].sim_mttdl_hours.has_value());
  CHECK(rows[0].rel_diff.has_value());

  opts.tolerance = 0.0;
  rows = run_compare(s, opts);
  CHECK(rows[0].verdict == "FAIL");
  CHECK(any_fail(rows));
}

TEST_CASE("CSV and JSON reports carry identical cell values") {
  const Scenario s =
      load_scenario(scenarios_dir() + "/replication_sweep.json");
  CompareOptions opts;
  opts.sim.trajectories = 200;
  opts.sim.master_seed = 5;
  const auto rows = run_compare(s, opts);

  std::ostringstream csv_os, json_os;
  write_report(rows, ReportFormat::csv, csv_os);
  write_report(rows, ReportFormat::json, json_os);

  // Re-split the CSV.
  std::istringstream csv_in(csv_os.str());
  std::string line;
  std::getline(csv_in, line);
  CHECK(line.rfind("scenario,sweep_param,sweep_value,r,mv_hours", 0) == 0);
  std::vector<std::string> header;
  {
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
  }
  CHECK(header.size() == 21);

  const auto doc = nlohmann::json::parse(json_os.str());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == rows.size());

  std::size_t ri = 0;
  while (std::getline(csv_in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    cells.resize(header.size());
    const auto& obj = doc.at(ri);
    for (std::size_t i = 0; i < header.size(); ++i) {
      const auto& jv = obj.at(header[i]);
      std::string as_text;
      if (jv.is_null()) {
        as_text = "";
      } else if (jv.is_string()) {
        as_text = jv.get<std::string>();
      } else if (jv.is_number_integer()) {
        as_text = std::to_string(jv.get<long long>());
      } else {
        as_text = format_number(jv.get<double>());
      }
      CHECK(as_text == cells[i]);
    }
    ++ri;
  }
  CHECK(ri == rows.size());
}

TEST_CASE("report formatting helpers") {
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_years_display(6128.58) == "6128.6");
  CHECK(format_years_display(31.96) == "32.0");
  CHECK(format_years_display(0.25) == "0.3");
  CHECK(format_years_display(-0.25) == "-0.3");
  CHECK(format_years_display(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(parse_report_format("csv") == ReportFormat::csv);
  CHECK(parse_report_format("json") == ReportFormat::json);
  CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);

  // An undetected-latent row serializes as the literal marker in both formats.
  ReportRow row;
  row.scenario = "x";
  row.mdl_hours = std::nullopt;
  std::ostringstream os;
  write_report({row}, ReportFormat::json, os);
  const auto doc = nlohmann::json::parse(os.str());
  CHECK(doc.at(0).at("mdl_hours").get<std::string>() == "undetected");
  CHECK(doc.at(0).at("sweep_value").is_null());
}
