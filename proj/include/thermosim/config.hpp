#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thermosim/case_studies.hpp"
#include "thermosim/design.hpp"
#include "thermosim/scheduler.hpp"
#include "thermosim/sim.hpp"

namespace thermosim {

/// Any problem with a configuration document. The message starts with the
/// file and the JSON path of the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Environment variable that overrides where bundled fixtures are looked up.
inline constexpr const char* kDataDirVariable = "THERMOSIM_DATA_DIR";

/// THERMOSIM_DATA_DIR when set, else the data directory of the source tree.
std::filesystem::path data_dir();

/// Absolute paths as given; relative paths against `base_dir` first, then
/// the data directory.
std::filesystem::path resolve_path(const std::string& path, const std::filesystem::path& base_dir);

/// Keys of numeric leaves that lack a recognised unit suffix and are not
/// known dimensionless quantities. Empty for a clean document.
std::vector<std::string> unit_suffix_violations(const std::filesystem::path& json_file);

Scenario load_scenario(const std::filesystem::path& file);

struct DesignInputs {
  DesignSpace space;
  std::vector<Season> seasons;
};

DesignInputs load_design_space(const std::filesystem::path& file);
Objective load_objective(const std::filesystem::path& file);

struct HorizonInputs {
  ForecastHorizon horizon;
  PlanOptions options;
};

HorizonInputs load_horizon(const std::filesystem::path& file);

/// `temperature_unit` is "C", "F" or "K".
Season load_season(const std::filesystem::path& temperature_file,
                   const std::filesystem::path& solar_file, std::string name,
                   const std::string& temperature_unit = "C");

struct FarmbeatsInputs {
  Scenario base;
  std::vector<Season> seasons;
  DataAcquisitionSpec router;
  PlanOptions options;
};

FarmbeatsInputs load_farmbeats(const std::filesystem::path& file);

struct MultiExitInputs {
  Scenario base;
  std::vector<Season> seasons;
  MultiExitSpec spec;
  PlanOptions options;
};

MultiExitInputs load_multi_exit(const std::filesystem::path& file);

/// Battery curve override: `x,y` CSV. Temperature curves carry Celsius on
/// disk and come back in kelvin.
EmpiricalCurve load_curve(const std::filesystem::path& file, bool x_is_celsius);

}  // namespace thermosim
