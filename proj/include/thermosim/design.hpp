#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thermosim/sim.hpp"

namespace thermosim {

/// Either a direct U or a full wall construction; the side length comes
/// from the base scenario.
struct InsulationOption {
  std::string label;
  std::optional<double> u;
  std::optional<WallConstruction> wall;

  EnclosureSpec apply(double side_length) const;
};

struct CoolingOption {
  std::string label;
  std::optional<FanSpec> fan;  // empty: passive only
};

struct DesignSpace {
  std::vector<InsulationOption> insulations;
  std::vector<CoolingOption> coolings;
  std::vector<double> operating_points;
};

/// One point of the sweep. Indices are positions in the DesignSpace axes and
/// double as the canonical ordering key.
struct DesignConfig {
  std::size_t insulation = 0;
  std::size_t cooling = 0;
  std::size_t point = 0;
  double utilization = 0.0;

  auto operator<=>(const DesignConfig&) const = default;
};

struct Season {
  std::string name;
  Trace temperature;  // K
  Trace solar;        // W
};

enum class Metric { EnergyEfficiency, Availability, WorkRate };

Metric parse_metric(std::string_view name);
std::string_view metric_name(Metric m);

/// Metric value used for ranking. Energy efficiency with nothing drained
/// from the battery counts as 100%.
double metric_value(const MetricsReport& report, Metric m);

struct Objective {
  Metric primary = Metric::Availability;
  double target = 100.0;              // primary must reach at least this
  double min_operating_point = 0.0;   // configs below this are infeasible
  std::vector<std::string> binding_seasons;  // empty: every season binds
  std::vector<Metric> secondary;             // priority order
};

struct SeasonMetrics {
  std::string season;
  MetricsReport metrics;
};

struct DesignResult {
  DesignConfig config;
  std::vector<SeasonMetrics> seasons;
  bool feasible = false;
  int rank = -1;
};

/// Full Cartesian product in insulation-major, then cooling, then
/// operating-point order. Throws std::invalid_argument for an empty axis.
std::vector<DesignConfig> enumerate(const DesignSpace& space);

/// Scenario for one configuration and season: base specs with the config's
/// enclosure, cooling and constant utilization, driven by the season traces.
Scenario configure(const Scenario& base, const DesignSpace& space, const DesignConfig& config,
                   const Season& season);

DesignResult evaluate(const Scenario& base, const DesignSpace& space, const DesignConfig& config,
                      std::span<const Season> seasons);

struct Selection {
  std::vector<DesignResult> results;  // input order, with feasible and rank filled in
  std::optional<std::size_t> selected;  // index into results; empty when infeasible
};

/// Filters on the primary target, then maximises the secondary metrics
/// lexicographically (mean over binding seasons). Ties go to the smaller
/// DesignConfig, so the outcome does not depend on input order.
Selection select(std::span<const DesignResult> results, const Objective& objective);

/// Evaluates every configuration (in parallel when threads > 1) and selects.
Selection sweep(const Scenario& base, const DesignSpace& space, std::span<const Season> seasons,
                const Objective& objective, unsigned threads = 0);

}  // namespace thermosim
