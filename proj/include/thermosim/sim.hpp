#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "thermosim/battery.hpp"
#include "thermosim/compute.hpp"
#include "thermosim/plan.hpp"
#include "thermosim/thermal.hpp"
#include "thermosim/trace.hpp"

namespace thermosim {

// ---------------------------------------------------------------------------
// Policies

struct ConstantUtilization {
  double utilization = 0.5;
};

/// Thermal-agnostic duty cycling: spreads nominal stored energy plus the solar
/// forecast evenly over the rest of the horizon, ignoring temperature effects.
struct DutyCycleEnergyProportional {
  /// How often the duty cycle is recomputed; 0 means once at the start.
  std::int64_t recompute_seconds = 0;
};

struct PlannedSchedule {
  SchedulePlan plan;
};

/// Round-based exit-stage selection from a nominal per-round energy budget.
struct MultiExitRounds {
  std::vector<double> stage_costs;        // J per round for stages 1..N
  std::vector<double> stage_utilization;  // utilization for stages 0..N
  std::int64_t round_seconds = 3600;
};

using Policy =
    std::variant<ConstantUtilization, DutyCycleEnergyProportional, PlannedSchedule, MultiExitRounds>;

struct Proposal {
  double utilization = 0.0;
  bool fan_enabled = true;
};

// ---------------------------------------------------------------------------
// Scenario

struct Scenario {
  std::string name = "scenario";
  EnclosureSpec enclosure = EnclosureSpec::from_u(1.0, 1.0);
  std::optional<FanSpec> fan;
  BatterySpec battery;
  ProcessorSpec processor;
  Trace temperature;  // K
  Trace solar;        // W
  Policy policy;
  EpochSeconds start = 0;
  std::int64_t duration_seconds = 0;
  std::int64_t step_seconds = 60;
  double initial_temperature = units::celsius_to_kelvin(25.0);
  bool initial_temperature_is_ambient = false;  // start at T_amb(start) instead
  double initial_energy = 0.0;  // J
  double fan_setpoint = units::celsius_to_kelvin(25.0);
  double compute_cutoff = units::celsius_to_kelvin(60.0);
  double compute_resume = units::celsius_to_kelvin(55.0);
  double availability_threshold = 0.0;
  bool fan_heat_in_enclosure = false;
  double pulldown_gain = 1.0;
  double pulldown_steps = 10.0;

  std::size_t step_count() const {
    return duration_seconds <= 0 ? 0 : static_cast<std::size_t>(duration_seconds / step_seconds);
  }
  EpochSeconds end() const { return start + duration_seconds; }
};

/// Quantities derived once from the scenario's specs.
struct Plant {
  double u;
  double area;
  double ua;
  Aggregate contents;
};

Plant make_plant(const Scenario& scenario);

/// Rejects inconsistent scenarios, including time steps that violate the
/// thermal stability limit (UnstableStepError).
void validate(const Scenario& scenario);

// ---------------------------------------------------------------------------
// Stepping

struct SimState {
  EpochSeconds time;
  double enclosure_temperature;  // K
  double stored_energy;          // J
  bool cutoff_latched = false;
};

SimState initial_state(const Scenario& scenario);

struct StepRecord {
  EpochSeconds time;
  double ambient_temperature;    // K
  double enclosure_temperature;  // K at step start
  double u_requested;
  double u_actual;
  double processor_power;  // W
  double fan_power;        // W
  double fan_airflow;      // m^3/s
  double solar_power;      // W available
  double energy_charged;     // J added to storage
  double energy_discharged;  // J delivered to loads
  double stored_energy;      // J at step end
  bool available;
  double work_done;
  // Columns beyond the core record.
  bool powered;
  double energy_drained;  // J removed from storage
  double solar_used;      // J of solar consumed by loads and charging

  bool operator==(const StepRecord&) const = default;
};

struct FanCommand {
  double q_dissipated = 0.0;  // W
  double power = 0.0;         // W
  double airflow = 0.0;       // m^3/s
  bool cannot_cool = false;
  bool saturated = false;
};

/// Airflow and power needed to hold the enclosure at the fan setpoint.
FanCommand fan_controller(const Scenario& scenario, const Plant& plant, double t_enclosure,
                          double t_ambient, double processor_power, bool enabled = true);

struct StepOutcome {
  SimState state;
  StepRecord record;
};

/// One fixed-order step: inputs, policy demand, gates and curtailment,
/// battery flows, thermal update.
StepOutcome step(const Scenario& scenario, const Plant& plant, const SimState& state,
                 const Proposal& proposal);

// ---------------------------------------------------------------------------
// Metrics

struct MetricsReport {
  std::optional<double> energy_efficiency;  // %, empty when nothing was drained
  double availability = 100.0;              // %
  double work_rate = 0.0;                   // work units per hour
  double total_work = 0.0;
  double total_fan_energy = 0.0;      // J
  double total_compute_energy = 0.0;  // J
  bool degenerate = false;            // zero-length horizon
};

std::optional<double> energy_efficiency(const std::vector<StepRecord>& trajectory);
double availability(const std::vector<StepRecord>& trajectory);
double availability(const std::vector<StepRecord>& trajectory, double u_min);
double work_rate(const std::vector<StepRecord>& trajectory, std::int64_t step_seconds);
MetricsReport summarize(const std::vector<StepRecord>& trajectory, std::int64_t step_seconds);

struct RunResult {
  std::vector<StepRecord> trajectory;
  MetricsReport metrics;
  SimState final_state;
};

/// Deterministic full run of the scenario under its policy.
RunResult run(const Scenario& scenario);

/// Runs from an explicit state for `steps` steps under the scenario's policy.
RunResult run_from(const Scenario& scenario, const SimState& state, std::size_t steps);

}  // namespace thermosim
