#include "thermosim/case_studies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace thermosim {

ProcessorSpec DataAcquisitionSpec::load() const {
  ProcessorSpec p{router_base_power + platform_power, router_max_power + platform_power, 1,
                  thermal};
  p.validate();
  return p;
}

ForecastHorizon season_horizon(const Season& season, EpochSeconds start,
                               std::int64_t duration_seconds, std::span<const double> demand,
                               std::int64_t slot_seconds) {
  if (slot_seconds <= 0) throw std::invalid_argument("slot duration must be positive");
  ForecastHorizon h;
  h.start = start;
  h.slot_seconds = slot_seconds;
  const auto n = static_cast<std::size_t>(duration_seconds / h.slot_seconds);
  if (n == 0) throw std::invalid_argument("case-study horizon shorter than one slot");
  if (!demand.empty() && demand.size() != n) {
    throw std::invalid_argument("demand pattern length does not match the horizon");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const EpochSeconds t = start + h.slot_seconds * static_cast<std::int64_t>(i);
    h.slots.push_back({season.temperature.at(t), std::max(0.0, season.solar.at(t)),
                       demand.empty() ? 0.0 : demand[i]});
  }
  return h;
}

namespace {

double total_work(const RunResult& r) {
  double w = 0.0;
  for (const auto& rec : r.trajectory) w += rec.work_done;
  return w;
}

double gain(double aware, double agnostic) {
  return agnostic > 0.0 ? 100.0 * (aware - agnostic) / agnostic : 0.0;
}

}  // namespace

DataRateComparison data_rate_comparison(const Scenario& base, std::span<const Season> seasons,
                                        const DataAcquisitionSpec& spec,
                                        const PlanOptions& options) {
  Scenario sc = base;
  sc.processor = spec.load();
  DataRateComparison out;
  double aware_sum = 0.0, agnostic_sum = 0.0;
  for (const Season& season : seasons) {
    ForecastHorizon h =
        season_horizon(season, season.temperature.start(), base.duration_seconds);
    const auto agnostic = run(forecast_scenario(h, sc, DutyCycleEnergyProportional{h.slot_seconds}));
    // The aware plan targets the rate the nominal budget promised at the start.
    const double nominal = agnostic.trajectory.empty() ? 0.0 : agnostic.trajectory.front().u_requested;
    for (auto& slot : h.slots) slot.demand = nominal;
    const PlanOutcome planned = plan(h, sc, options);
    const auto aware = run(forecast_scenario(h, sc, PlannedSchedule{planned.plan}));

    const double hours = double(h.end() - h.start) / 3600.0;
    SeasonRates r;
    r.season = season.name;
    r.aware_rate = total_work(aware) * spec.data_rate_at_max / hours;
    r.agnostic_rate = total_work(agnostic) * spec.data_rate_at_max / hours;
    r.gain_percent = gain(r.aware_rate, r.agnostic_rate);
    aware_sum += r.aware_rate;
    agnostic_sum += r.agnostic_rate;
    out.seasons.push_back(r);
  }
  out.annual_gain_percent = gain(aware_sum, agnostic_sum);
  return out;
}

void MultiExitSpec::validate() const {
  if (stage_costs.empty()) throw std::invalid_argument("multi-exit needs at least one stage");
  if (stage_work.size() != stage_costs.size()) {
    throw std::invalid_argument("multi-exit needs one work value per stage");
  }
  for (std::size_t i = 0; i < stage_costs.size(); ++i) {
    if (!(stage_costs[i] > 0.0)) throw std::invalid_argument("stage costs must be positive");
    if (i > 0 && !(stage_costs[i] > stage_costs[i - 1])) {
      throw std::invalid_argument("stage costs must increase strictly with stage");
    }
  }
  if (round_seconds <= 0) throw std::invalid_argument("round period must be positive");
}

MultiExitSpec default_multi_exit(const ProcessorSpec& p, std::int64_t round_seconds, int stages) {
  const double idle = p.unit_count * p.base_power * double(round_seconds);
  const double full = p.unit_count * p.max_power * double(round_seconds);
  if (!(idle > 0.0) || !(full > idle)) {
    throw std::invalid_argument("default stage profile needs 0 < base power < max power");
  }
  MultiExitSpec spec;
  spec.round_seconds = round_seconds;
  for (int k = 1; k <= stages; ++k) {
    spec.stage_costs.push_back(idle * std::pow(full / idle, double(k) / stages));
    spec.stage_work.push_back(double(k));
  }
  return spec;
}

int exit_stage_selection(double energy_budget, const MultiExitSpec& spec) {
  if (energy_budget < 0.0) throw std::invalid_argument("energy budget must be >= 0");
  return select_exit_stage(energy_budget, spec.stage_costs);
}

std::vector<double> stage_utilizations(const MultiExitSpec& spec, const ProcessorSpec& p) {
  spec.validate();
  std::vector<double> u{0.0};
  const double span = p.max_power - p.base_power;
  for (double cost : spec.stage_costs) {
    const double per_unit = cost / double(spec.round_seconds) / p.unit_count;
    if (span <= 0.0 || per_unit < p.base_power - 1e-9 || per_unit > p.max_power + 1e-9) {
      throw std::invalid_argument("stage cost outside the processor's power range");
    }
    u.push_back(std::clamp((per_unit - p.base_power) / span, 0.0, 1.0));
  }
  return u;
}

double StageHistogram::mean_stage() const {
  const int n = rounds();
  if (n == 0) return 0.0;
  double s = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) s += double(k) * counts[k];
  return s / n;
}

int StageHistogram::rounds() const { return std::accumulate(counts.begin(), counts.end(), 0); }

namespace {

struct StageRun {
  std::vector<int> achieved;
  double drain = 0.0;
  int total() const { return std::accumulate(achieved.begin(), achieved.end(), 0); }
};

StageRun achieved_stages(const Scenario& sc, const MultiExitSpec& spec, std::size_t rounds) {
  const auto result = run(sc);
  StageRun out;
  out.achieved.assign(rounds, 0);
  const std::size_t per = result.trajectory.size() / rounds;
  const double dt = double(sc.step_seconds);
  for (std::size_t i = 0; i < rounds; ++i) {
    double energy = 0.0;
    for (std::size_t k = 0; k < per; ++k) {
      const auto& r = result.trajectory[i * per + k];
      energy += r.processor_power * dt;
      out.drain += r.energy_drained;
    }
    // Small slack absorbs the round-off of reconstructing the round energy.
    out.achieved[i] = select_exit_stage(energy * (1.0 + 1e-9), spec.stage_costs);
  }
  return out;
}

std::vector<int> requested_stages(const RunResult& r, std::span<const double> stage_u,
                                  std::size_t rounds) {
  std::vector<int> stages(rounds, 0);
  const std::size_t per = r.trajectory.size() / rounds;
  for (std::size_t i = 0; i < rounds; ++i) {
    const double u = r.trajectory[i * per].u_requested;
    const auto it = std::find(stage_u.begin(), stage_u.end(), u);
    stages[i] = it == stage_u.end() ? 0 : int(it - stage_u.begin());
  }
  return stages;
}

}  // namespace

StageHistogram exit_stage_distribution(const Scenario& base, const Season& season,
                                       const MultiExitSpec& spec, Budgeting budgeting,
                                       const PlanOptions& options) {
  spec.validate();
  const std::vector<double> stage_u = stage_utilizations(spec, base.processor);
  const int top = int(spec.stage_costs.size());
  const ForecastHorizon h =
      season_horizon(season, season.temperature.start(), base.duration_seconds, {},
                     spec.round_seconds);
  const std::size_t rounds = h.slots.size();

  const Scenario agnostic_sc = forecast_scenario(
      h, base, MultiExitRounds{spec.stage_costs, stage_u, spec.round_seconds});
  std::vector<int> stages = requested_stages(run(agnostic_sc), stage_u, rounds);

  auto scenario_for = [&](const std::vector<int>& s) {
    std::vector<double> u(rounds);
    for (std::size_t i = 0; i < rounds; ++i) u[i] = stage_u[std::size_t(s[i])];
    return forecast_scenario(h, base, PlannedSchedule{SchedulePlan{h.start, h.slot_seconds, u}});
  };
  StageRun current = achieved_stages(scenario_for(stages), spec, rounds);

  if (budgeting == Budgeting::ThermalAware) {
    // Backward greedy over stage levels, judged by simulated achieved stages.
    auto better = [](const StageRun& a, const StageRun& b) {
      if (a.total() != b.total()) return a.total() > b.total();
      return a.drain < b.drain * (1.0 - 1e-9);
    };
    for (int round = 0; round < options.max_rounds; ++round) {
      bool changed = false;
      for (std::size_t k = rounds; k-- > 0;) {
        std::optional<std::vector<int>> best;
        StageRun best_run = current;
        auto consider = [&](std::vector<int> trial) {
          StageRun r = achieved_stages(scenario_for(trial), spec, rounds);
          if (better(r, best_run)) {
            best_run = std::move(r);
            best = std::move(trial);
          }
        };
        if (stages[k] < top) {
          auto t = stages;
          ++t[k];
          consider(t);
          for (std::size_t j = 0; j < rounds; ++j) {
            if (j == k || stages[j] == 0) continue;
            auto m = t;
            --m[j];
            consider(m);
          }
        }
        if (best) {
          stages = std::move(*best);
          current = std::move(best_run);
          changed = true;
        }
      }
      if (!changed) break;
    }
  }

  StageHistogram hist;
  hist.counts.assign(std::size_t(top) + 1, 0);
  for (int s : current.achieved) ++hist.counts[std::size_t(s)];
  return hist;
}

}  // namespace thermosim
