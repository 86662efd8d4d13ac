#pragma once

#include <span>
#include <string>
#include <vector>

#include "thermosim/design.hpp"
#include "thermosim/scheduler.hpp"

namespace thermosim {

// ---------------------------------------------------------------------------
// Solar-powered data acquisition base station

struct DataAcquisitionSpec {
  double router_base_power = 3.0;   // W
  double router_max_power = 20.0;   // W
  double data_rate_at_max = 1.0;    // data units per second at full rate
  double platform_power = 0.0;      // W drawn by the compute platform regardless of rate
  ThermalMass thermal{1.0, 900.0};

  /// Router plus platform as one affine load.
  ProcessorSpec load() const;
};

struct SeasonRates {
  std::string season;
  double aware_rate = 0.0;     // data units per hour
  double agnostic_rate = 0.0;  // data units per hour
  double gain_percent = 0.0;
};

struct DataRateComparison {
  std::vector<SeasonRates> seasons;
  double annual_gain_percent = 0.0;  // over the summed seasons
};

/// Forecast horizon sampling one season trace at slot starts, with the given
/// demand pattern (one value per slot, or empty for zero demand).
ForecastHorizon season_horizon(const Season& season, EpochSeconds start,
                               std::int64_t duration_seconds, std::span<const double> demand = {},
                               std::int64_t slot_seconds = 3600);

/// Thermal-agnostic: energy-proportional duty cycle recomputed every slot.
/// Thermal-aware: the scheduler, asked for the rate the nominal energy budget
/// allows at the start of the horizon.
/// Both run on the same hourly forecast of each season.
DataRateComparison data_rate_comparison(const Scenario& base, std::span<const Season> seasons,
                                        const DataAcquisitionSpec& spec,
                                        const PlanOptions& options = {});

// ---------------------------------------------------------------------------
// Multi-exit training rounds

struct MultiExitSpec {
  std::vector<double> stage_costs;  // J per round for stages 1..7, strictly increasing
  std::vector<double> stage_work;   // work value of stages 1..7
  std::int64_t round_seconds = 3600;

  void validate() const;
};

/// Roughly geometric costs from the idle round energy up to a full-power
/// round of `processor`.
MultiExitSpec default_multi_exit(const ProcessorSpec& processor, std::int64_t round_seconds = 3600,
                                 int stages = 7);

int exit_stage_selection(double energy_budget, const MultiExitSpec& spec);

/// Utilization whose round energy equals each stage cost; index 0 is skip (idle).
std::vector<double> stage_utilizations(const MultiExitSpec& spec, const ProcessorSpec& processor);

enum class Budgeting { ThermalAgnostic, ThermalAware };

struct StageHistogram {
  std::vector<int> counts;  // index = stage, 0 = skip
  double mean_stage() const;
  int rounds() const;
};

/// Stage reached in each round is the highest stage whose cost the processor
/// actually consumed during that round.
StageHistogram exit_stage_distribution(const Scenario& base, const Season& season,
                                       const MultiExitSpec& spec, Budgeting budgeting,
                                       const PlanOptions& options = {});

}  // namespace thermosim
