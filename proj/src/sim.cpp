#include "thermosim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thermosim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Solar energy the forecast promises from `from` to the horizon end, sampled
// the same way the engine samples it.
double forecast_solar(const Scenario& sc, EpochSeconds from) {
  double total = 0.0;
  for (EpochSeconds t = from; t + sc.step_seconds <= sc.end(); t += sc.step_seconds) {
    total += std::max(0.0, sc.solar.at(t)) * static_cast<double>(sc.step_seconds);
  }
  return total;
}

// Utilization that spends `budget` joules evenly over `seconds`.
double utilization_for_budget(const ProcessorSpec& p, double budget, double seconds) {
  if (seconds <= 0.0) return 0.0;
  const double per_unit = budget / seconds / p.unit_count;
  const double span = p.max_power - p.base_power;
  if (span <= 0.0) return per_unit >= p.max_power ? 1.0 : 0.0;
  return std::clamp((per_unit - p.base_power) / span, 0.0, 1.0);
}

// Holds the per-run memory some policies need (current duty cycle, current round).
class PolicyRunner {
 public:
  PolicyRunner(const Scenario& sc, EpochSeconds run_start) : sc_(sc), run_start_(run_start) {}

  Proposal propose(const SimState& s) {
    return std::visit(
        overloaded{
            [](const ConstantUtilization& c) { return Proposal{c.utilization, true}; },
            [&](const DutyCycleEnergyProportional& d) { return duty_cycle(d, s); },
            [&](const PlannedSchedule& p) {
              return Proposal{p.plan.utilization[p.plan.slot_of(s.time)], true};
            },
            [&](const MultiExitRounds& m) { return multi_exit(m, s); },
        },
        sc_.policy);
  }

 private:
  Proposal duty_cycle(const DutyCycleEnergyProportional& d, const SimState& s) {
    const bool due = !cached_ || (d.recompute_seconds > 0 &&
                                  (s.time - run_start_) % d.recompute_seconds == 0);
    if (due) {
      const double nominal = std::max(0.0, s.stored_energy - sc_.battery.reserve());
      const double budget = nominal + solar_ahead(s.time);
      cached_u_ = utilization_for_budget(sc_.processor, budget, double(sc_.end() - s.time));
      cached_ = true;
    }
    return {cached_u_, true};
  }

  Proposal multi_exit(const MultiExitRounds& m, const SimState& s) {
    if (!cached_ || (s.time - run_start_) % m.round_seconds == 0) {
      const double remaining = double(sc_.end() - s.time);
      const double rounds = std::max(1.0, std::ceil(remaining / double(m.round_seconds)));
      const double nominal = std::max(0.0, s.stored_energy - sc_.battery.reserve());
      const double budget = (nominal + solar_ahead(s.time)) / rounds;
      const int stage = select_exit_stage(budget, m.stage_costs);
      cached_u_ = m.stage_utilization[static_cast<std::size_t>(stage)];
      cached_ = true;
    }
    return {cached_u_, true};
  }

  // Solar energy from `t` to the end of the horizon. Suffix sums over the step
  // grid are built on first use; off-grid times fall back to the direct sum.
  double solar_ahead(EpochSeconds t) {
    const std::int64_t offset = t - sc_.start;
    if (offset < 0 || offset % sc_.step_seconds != 0) return forecast_solar(sc_, t);
    if (solar_suffix_.empty()) {
      const std::size_t n = sc_.step_count();
      solar_suffix_.assign(n + 1, 0.0);
      for (std::size_t i = n; i-- > 0;) {
        const EpochSeconds ti = sc_.start + static_cast<std::int64_t>(i) * sc_.step_seconds;
        solar_suffix_[i] = solar_suffix_[i + 1] +
                           std::max(0.0, sc_.solar.at(ti)) * static_cast<double>(sc_.step_seconds);
      }
    }
    const auto i = static_cast<std::size_t>(offset / sc_.step_seconds);
    return i < solar_suffix_.size() ? solar_suffix_[i] : 0.0;
  }

  const Scenario& sc_;
  EpochSeconds run_start_;
  std::vector<double> solar_suffix_;
  bool cached_ = false;
  double cached_u_ = 0.0;
};

}  // namespace

Plant make_plant(const Scenario& sc) {
  const double u = combined_heat_transfer_coefficient(sc.enclosure);
  const double area = surface_area(sc.enclosure);
  const ThermalMass processors{sc.processor.thermal.mass * sc.processor.unit_count,
                               sc.processor.thermal.specific_heat};
  return {u, area, u * area,
          enclosure_aggregate(enclosure_air(sc.enclosure), sc.battery.thermal, processors)};
}

void validate(const Scenario& sc) {
  sc.battery.validate();
  sc.processor.validate();
  require(sc.step_seconds > 0, "step must be a positive number of seconds");
  require(sc.duration_seconds >= 0, "duration must be >= 0");
  require(sc.initial_temperature > 0.0, "initial temperature must be above absolute zero");
  require(sc.initial_energy >= 0.0 && sc.initial_energy <= sc.battery.nominal_capacity,
          "initial energy must be within [0, capacity]");
  require(sc.compute_resume <= sc.compute_cutoff, "resume temperature must not exceed cutoff");
  require(sc.availability_threshold >= 0.0 && sc.availability_threshold <= 1.0,
          "availability threshold must be in [0, 1]");
  require(sc.pulldown_gain >= 0.0 && sc.pulldown_steps >= 1.0,
          "pull-down gain must be >= 0 and span at least one step");
  const Plant plant = make_plant(sc);
  check_step(plant.contents.heat_capacity, plant.u, plant.area, double(sc.step_seconds));
  std::visit(overloaded{
                 [](const ConstantUtilization& c) {
                   OperatingPoint{c.utilization};
                 },
                 [](const DutyCycleEnergyProportional& d) {
                   require(d.recompute_seconds >= 0, "recompute period must be >= 0");
                 },
                 [&](const PlannedSchedule& p) {
                   require(p.plan.slot_seconds > 0, "plan slot must be positive");
                   for (double u : p.plan.utilization) OperatingPoint{u};
                   if (sc.step_count() > 0) {
                     require(p.plan.start <= sc.start && sc.end() <= p.plan.end(),
                             "schedule plan does not cover the horizon");
                   }
                 },
                 [](const MultiExitRounds& m) {
                   require(m.round_seconds > 0, "round period must be positive");
                   require(m.stage_utilization.size() == m.stage_costs.size() + 1,
                           "multi-exit needs one utilization per stage plus skip");
                   for (double u : m.stage_utilization) OperatingPoint{u};
                 },
             },
             sc.policy);
}

SimState initial_state(const Scenario& sc) {
  const double t0 = sc.initial_temperature_is_ambient && !sc.temperature.empty()
                        ? sc.temperature.at(sc.start)
                        : sc.initial_temperature;
  return {sc.start, t0, sc.initial_energy, false};
}

FanCommand fan_controller(const Scenario& sc, const Plant& plant, double t_enc, double t_amb,
                          double processor_power, bool enabled) {
  FanCommand cmd;
  if (!sc.fan || !enabled || t_enc <= sc.fan_setpoint) return cmd;
  if (t_enc <= t_amb) {
    cmd.cannot_cool = true;
    return cmd;
  }
  const FanSpec& fan = *sc.fan;
  const double q_transfer = heat_transfer_rate(plant.u, plant.area, t_amb, t_enc);
  const double steady = std::max(0.0, processor_power + q_transfer);
  const double pull_window = sc.pulldown_steps * double(sc.step_seconds);
  const double pulldown =
      sc.pulldown_gain * (t_enc - sc.fan_setpoint) * plant.contents.heat_capacity / pull_window;
  const double need = steady + pulldown;
  const double delta_air = t_enc - t_amb;
  double airflow = required_airflow(need, kFanAirDensity, kFanAirSpecificHeat, delta_air);
  double q = need;
  if (airflow > fan.max_airflow) {
    airflow = fan.max_airflow;
    q = kFanAirDensity * kFanAirSpecificHeat * airflow * delta_air;
    cmd.saturated = true;
  }
  cmd.airflow = airflow;
  cmd.q_dissipated = q;
  cmd.power = fan_power(fan, airflow);
  return cmd;
}

StepOutcome step(const Scenario& sc, const Plant& plant, const SimState& s,
                 const Proposal& proposal) {
  const double dt = double(sc.step_seconds);
  // (1) environment
  const double t_amb = sc.temperature.at(s.time);
  const double solar = std::max(0.0, sc.solar.at(s.time));

  bool latched = s.cutoff_latched;
  if (latched && s.enclosure_temperature <= sc.compute_resume) latched = false;
  if (!latched && s.enclosure_temperature >= sc.compute_cutoff) latched = true;

  const BatteryState battery{s.stored_energy, s.enclosure_temperature};
  const double u_req = std::clamp(proposal.utilization, 0.0, 1.0);

  // (2) demand for a candidate operating point, fan included
  auto fan_for = [&](double p_proc) {
    return fan_controller(sc, plant, s.enclosure_temperature, t_amb, p_proc,
                          proposal.fan_enabled);
  };
  auto feasible = [&](double load) {
    const double deficit = load - solar;
    if (deficit <= 0.0) return true;
    const double available = available_energy(sc.battery, battery, deficit);
    return deficit * dt <= available * (1.0 + 1e-12);
  };
  auto load_at = [&](double u) {
    const double p = power_at(sc.processor, OperatingPoint{u});
    return p + fan_for(p).power;
  };

  // (3) gates and curtailment
  bool on = !latched;
  double u = u_req;
  if (on && !feasible(load_at(u_req))) {
    if (!feasible(load_at(0.0))) {
      on = false;
      u = 0.0;
    } else {
      double lo = 0.0, hi = u_req;
      for (int i = 0; i < 60 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (feasible(load_at(mid)) ? lo : hi) = mid;
      }
      u = lo;
    }
  }
  if (!on) u = 0.0;

  const double p_proc = on ? power_at(sc.processor, OperatingPoint{u}) : 0.0;
  FanCommand fan = fan_for(p_proc);
  if (!feasible(p_proc + fan.power)) fan = FanCommand{};
  const double load = p_proc + fan.power;

  // (4) energy flows: solar first, battery covers the deficit, surplus charges
  const double solar_to_load = std::min(solar, load);
  const double deficit = load - solar_to_load;
  BatteryState next_battery = battery;
  double delivered = 0.0, drained = 0.0;
  if (deficit > 0.0) {
    const auto d = discharge(sc.battery, battery, deficit, dt);
    delivered = d.delivered;
    drained = d.drained;
    next_battery = d.state;
  }
  const double surplus = solar - solar_to_load;
  double charged = 0.0, charge_input = 0.0;
  if (surplus > 0.0) {
    const auto c = charge(sc.battery, next_battery, surplus, dt);
    charged = c.accepted;
    charge_input = c.consumed;
    next_battery = c.state;
  }

  // (5) thermal update with the start-of-step transfer rate
  const EnclosureThermalState thermal{s.enclosure_temperature, plant.contents.mass,
                                      plant.contents.heat_capacity};
  const double q_transfer = heat_transfer_rate(plant.u, plant.area, t_amb, s.enclosure_temperature);
  const double heat = p_proc + (sc.fan_heat_in_enclosure ? fan.power : 0.0);
  const double t_next = step_enclosure_temperature(thermal, q_transfer, heat, fan.q_dissipated, dt);

  // (6) record
  const bool available = on && (u_req == 0.0 || u >= sc.availability_threshold);
  StepRecord rec{s.time,
                 t_amb,
                 s.enclosure_temperature,
                 u_req,
                 u,
                 p_proc,
                 fan.power,
                 fan.airflow,
                 solar,
                 charged,
                 delivered,
                 next_battery.stored_energy,
                 available,
                 on ? work_rate(sc.processor, OperatingPoint{u}) * dt : 0.0,
                 on,
                 drained,
                 solar_to_load * dt + charge_input};
  SimState next{s.time + sc.step_seconds, t_next, next_battery.stored_energy, latched};
  return {next, rec};
}

std::optional<double> energy_efficiency(const std::vector<StepRecord>& trajectory) {
  double compute = 0.0, drained = 0.0;
  for (const auto& r : trajectory) {
    const double load = r.processor_power + r.fan_power;
    if (load > 0.0) compute += r.energy_discharged * r.processor_power / load;
    drained += r.energy_drained;
  }
  if (drained <= 0.0) return std::nullopt;
  return std::min(100.0, 100.0 * compute / drained);
}

double availability(const std::vector<StepRecord>& trajectory) {
  if (trajectory.empty()) return 100.0;
  const auto up = std::count_if(trajectory.begin(), trajectory.end(),
                                [](const StepRecord& r) { return r.available; });
  return 100.0 * double(up) / double(trajectory.size());
}

double availability(const std::vector<StepRecord>& trajectory, double u_min) {
  if (trajectory.empty()) return 100.0;
  const auto up = std::count_if(trajectory.begin(), trajectory.end(), [&](const StepRecord& r) {
    return r.powered && (r.u_requested == 0.0 || r.u_actual >= u_min);
  });
  return 100.0 * double(up) / double(trajectory.size());
}

double work_rate(const std::vector<StepRecord>& trajectory, std::int64_t step_seconds) {
  if (trajectory.empty()) return 0.0;
  double work = 0.0;
  for (const auto& r : trajectory) work += r.work_done;
  const double hours = double(trajectory.size()) * double(step_seconds) / 3600.0;
  return work / hours;
}

MetricsReport summarize(const std::vector<StepRecord>& trajectory, std::int64_t step_seconds) {
  MetricsReport m;
  if (trajectory.empty()) {
    m.degenerate = true;
    return m;
  }
  const double dt = double(step_seconds);
  for (const auto& r : trajectory) {
    m.total_work += r.work_done;
    m.total_fan_energy += r.fan_power * dt;
    m.total_compute_energy += r.processor_power * dt;
  }
  m.energy_efficiency = energy_efficiency(trajectory);
  m.availability = availability(trajectory);
  m.work_rate = work_rate(trajectory, step_seconds);
  return m;
}

RunResult run_from(const Scenario& sc, const SimState& state, std::size_t steps) {
  const Plant plant = make_plant(sc);
  PolicyRunner policy(sc, state.time);
  RunResult out;
  out.trajectory.reserve(steps);
  SimState s = state;
  for (std::size_t i = 0; i < steps; ++i) {
    auto [next, rec] = step(sc, plant, s, policy.propose(s));
    out.trajectory.push_back(rec);
    s = next;
  }
  out.final_state = s;
  out.metrics = summarize(out.trajectory, sc.step_seconds);
  return out;
}

RunResult run(const Scenario& sc) {
  validate(sc);
  return run_from(sc, initial_state(sc), sc.step_count());
}

}  // namespace thermosim
