// Command-line entry points. Errors go to stderr as one JSON line:
//   {"error":"<kind>","message":"..."}
// with exit status 2 (usage), 3 (bad input) or 4 (simulation failure).

#include <filesystem>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "thermosim/case_studies.hpp"
#include "thermosim/config.hpp"
#include "thermosim/csv_io.hpp"
#include "thermosim/csv_util.hpp"
#include "thermosim/presets.hpp"

namespace fs = std::filesystem;
using namespace thermosim;
using ojson = nlohmann::ordered_json;

namespace {

int fail(const char* kind, const std::string& message, int code) {
  std::cerr << ojson{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

int cmd_simulate(const fs::path& scenario, const fs::path& traj, const fs::path& metrics) {
  const Scenario sc = load_scenario(scenario);
  const RunResult r = run(sc);
  write_file(traj, format_trajectory(r.trajectory));
  write_file(metrics, format_metrics(r.metrics));
  return 0;
}

int cmd_design(const fs::path& scenario, const fs::path& space_file, const fs::path& objective_file,
               const fs::path& out, unsigned threads) {
  const Scenario base = load_scenario(scenario);
  const DesignInputs in = load_design_space(space_file);
  const Objective obj = load_objective(objective_file);
  const Selection sel = sweep(base, in.space, in.seasons, obj, threads);
  write_file(out, format_sweep(sweep_rows(in.space, sel)));

  ojson summary;
  summary["feasible"] = sel.selected.has_value();
  if (sel.selected) {
    const DesignConfig& c = sel.results[*sel.selected].config;
    summary["insulation"] = in.space.insulations[c.insulation].label;
    summary["cooling"] = in.space.coolings[c.cooling].label;
    summary["utilization"] = c.utilization;
  }
  summary["configurations"] = sel.results.size();
  fs::path side = out;
  side.replace_extension(".selection.json");
  write_file(side, summary.dump(2) + "\n");
  std::cout << summary.dump() << '\n';
  return 0;
}

int cmd_schedule(const fs::path& scenario, const fs::path& horizon_file, const fs::path& out,
                 bool compare) {
  const Scenario base = load_scenario(scenario);
  const HorizonInputs in = load_horizon(horizon_file);
  ojson summary;
  PlanOutcome outcome;
  if (compare) {
    const NaiveComparison cmp = compare_against_naive(in.horizon, base, in.options);
    outcome = cmp.planned;
    summary["naive_work"] = cmp.naive_work;
    summary["planned_work"] = cmp.planned_work;
    summary["gain_percent"] = cmp.gain_percent;
  } else {
    outcome = plan(in.horizon, base, in.options);
    summary["planned_work"] = outcome.planned_work;
  }
  summary["feasible"] = outcome.feasible;
  summary["demand_work"] = outcome.demand_work;
  summary["rounds"] = outcome.rounds;
  summary["fell_back_to_naive"] = outcome.fell_back;
  write_file(out, format_plan(outcome.plan));
  std::cout << summary.dump() << '\n';
  return 0;
}

int cmd_validate(const std::string& preset, const fs::path& out) {
  write_file(out, format_warmup_curves(warmup_family(preset)));
  return 0;
}

int cmd_case_study(const std::string& name, const fs::path& out, const std::string& config) {
  fs::create_directories(out);
  if (name == "farmbeats") {
    const fs::path file = config.empty() ? data_dir() / "case_studies/farmbeats.json" : fs::path(config);
    const FarmbeatsInputs in = load_farmbeats(file);
    const DataRateComparison cmp = data_rate_comparison(in.base, in.seasons, in.router, in.options);
    std::string csv = "season,aware_rate_per_h,agnostic_rate_per_h,gain_percent\n";
    ojson summary;
    for (const auto& s : cmp.seasons) {
      csv += s.season + ',' + csv::format_double(s.aware_rate) + ',' +
             csv::format_double(s.agnostic_rate) + ',' + csv::format_double(s.gain_percent) + '\n';
      summary["seasons"][s.season] = s.gain_percent;
    }
    summary["annual_gain_percent"] = cmp.annual_gain_percent;
    write_file(out / "data_rates.csv", csv);
    write_file(out / "summary.json", summary.dump(2) + "\n");
    std::cout << summary.dump() << '\n';
    return 0;
  }
  if (name == "multiexit") {
    const fs::path file = config.empty() ? data_dir() / "case_studies/multiexit.json" : fs::path(config);
    const MultiExitInputs in = load_multi_exit(file);
    std::string csv = "season,stage,aware_rounds,agnostic_rounds\n";
    ojson summary;
    for (const Season& season : in.seasons) {
      const auto aware = exit_stage_distribution(in.base, season, in.spec, Budgeting::ThermalAware, in.options);
      const auto agnostic =
          exit_stage_distribution(in.base, season, in.spec, Budgeting::ThermalAgnostic, in.options);
      for (std::size_t k = 0; k < aware.counts.size(); ++k) {
        csv += season.name + ',' + std::to_string(k) + ',' + std::to_string(aware.counts[k]) + ',' +
               std::to_string(agnostic.counts[k]) + '\n';
      }
      summary["seasons"][season.name] = {{"aware_mean_stage", aware.mean_stage()},
                                         {"agnostic_mean_stage", agnostic.mean_stage()}};
    }
    write_file(out / "stage_histogram.csv", csv);
    write_file(out / "summary.json", summary.dump(2) + "\n");
    std::cout << summary.dump() << '\n';
    return 0;
  }
  return fail("usage", "unknown case study '" + name + "' (farmbeats | multiexit)", 2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace-driven simulator for solar and battery powered computers in enclosures"};
  app.require_subcommand(1);

  fs::path scenario, traj, metrics, space, objective, out, horizon;
  std::string preset, name, config;
  bool compare = false;
  unsigned threads = 0;

  auto* sim = app.add_subcommand("simulate", "Run one scenario");
  sim->add_option("--scenario", scenario, "Scenario JSON")->required();
  sim->add_option("--out-trajectory", traj, "Trajectory CSV")->required();
  sim->add_option("--out-metrics", metrics, "Metrics JSON")->required();

  auto* des = app.add_subcommand("design", "Sweep the design space and select a configuration");
  des->add_option("--scenario", scenario, "Base scenario JSON")->required();
  des->add_option("--space", space, "Design space JSON")->required();
  des->add_option("--objective", objective, "Objective JSON")->required();
  des->add_option("--out", out, "Sweep matrix CSV")->required();
  des->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* sch = app.add_subcommand("schedule", "Plan utilization over a forecast horizon");
  sch->add_option("--scenario", scenario, "Base scenario JSON")->required();
  sch->add_option("--horizon", horizon, "Forecast horizon JSON")->required();
  sch->add_option("--out-plan", out, "Plan CSV")->required();
  sch->add_flag("--compare-naive", compare, "Also report the constant-utilization baseline");

  auto* val = app.add_subcommand("validate-model", "Emit thermal model curve families");
  val->add_option("--preset", preset, "fig6a | fig6b | fig6c")
      ->required()
      ->check(CLI::IsMember({"fig6a", "fig6b", "fig6c"}));
  val->add_option("--out", out, "Curve CSV")->required();

  auto* cs = app.add_subcommand("case-study", "Run a bundled case study");
  cs->add_option("--name", name, "farmbeats | multiexit")
      ->required()
      ->check(CLI::IsMember({"farmbeats", "multiexit"}));
  cs->add_option("--out", out, "Output directory")->required();
  cs->add_option("--config", config, "Case-study JSON (defaults to the bundled fixture)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (auto& ch : msg) if (ch == '\n') ch = ' ';
    return fail("usage", msg, 2);
  }

  try {
    if (*sim) return cmd_simulate(scenario, traj, metrics);
    if (*des) return cmd_design(scenario, space, objective, out, threads);
    if (*sch) return cmd_schedule(scenario, horizon, out, compare);
    if (*val) return cmd_validate(preset, out);
    if (*cs) return cmd_case_study(name, out, config);
  } catch (const ConfigError& e) {
    return fail("config", e.what(), 3);
  } catch (const FormatError& e) {
    return fail("format", e.what(), 3);
  } catch (const TraceError& e) {
    return fail("trace", e.what(), 4);
  } catch (const UnstableStepError& e) {
    return fail("unstable_step", e.what(), 4);
  } catch (const std::invalid_argument& e) {
    return fail("invalid", e.what(), 3);
  } catch (const std::exception& e) {
    return fail("runtime", e.what(), 4);
  }
  return 0;
}
