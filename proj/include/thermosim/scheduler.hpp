#pragma once

#include <vector>

#include "thermosim/sim.hpp"

namespace thermosim {

struct ForecastSlot {
  double ambient_temperature;  // K
  double solar_power;          // W
  double demand;               // requested utilization for the slot
};

/// Hourly (by default) forecast of the inputs the planner sees.
struct ForecastHorizon {
  EpochSeconds start = 0;
  std::int64_t slot_seconds = 3600;
  std::vector<ForecastSlot> slots;

  EpochSeconds end() const {
    return start + slot_seconds * static_cast<std::int64_t>(slots.size());
  }
  /// Piecewise-linear through slot starts, held over the last slot.
  Trace temperature_trace() const;
  Trace solar_trace() const;
  /// Total demand in utilization-seconds, due by the end of the horizon.
  double demand_utilization_seconds() const;
  void validate(std::int64_t step_seconds) const;
};

/// `base` driven by the forecast traces over exactly the horizon.
Scenario forecast_scenario(const ForecastHorizon& horizon, const Scenario& base, Policy policy);

struct PlanOptions {
  int max_rounds = 20;
  double quantum = 0.05;  // utilization moved per reallocation
  double min_utilization = 0.0;
  double max_utilization = 1.0;
};

struct PlanOutcome {
  SchedulePlan plan;
  bool feasible = false;  // simulated work meets the demand
  double planned_work = 0.0;
  double demand_work = 0.0;
  double planned_drain = 0.0;  // J drained from storage
  int rounds = 0;
  bool fell_back = false;  // the naive constant schedule was at least as good
};

/// Work done per joule drained from storage when `slot` runs at `u` from `state`.
/// Infinite when the slot drains nothing.
double marginal_efficiency(const ForecastHorizon& horizon, const Scenario& base,
                           const SimState& state, std::size_t slot, double u);

/// Backward greedy reallocation of utilization between slots, verified by
/// full simulation, starting from the forecast's default pattern.
PlanOutcome plan(const ForecastHorizon& horizon, const Scenario& base,
                 const PlanOptions& options = {});

/// The constant schedule with the same total demand.
SchedulePlan naive_plan(const ForecastHorizon& horizon);

struct NaiveComparison {
  double naive_work = 0.0;
  double planned_work = 0.0;
  double gain_percent = 0.0;
  PlanOutcome planned;
};

NaiveComparison compare_against_naive(const ForecastHorizon& horizon, const Scenario& base,
                                      const PlanOptions& options = {});

}  // namespace thermosim
