#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thermosim/design.hpp"
#include "thermosim/plan.hpp"
#include "thermosim/sim.hpp"

namespace thermosim {

/// Malformed output-format file; the message names the origin and line.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Trajectory: one StepRecord per row. Doubles use the shortest round-trip form.
inline constexpr std::string_view kTrajectoryHeader =
    "time,t_amb_k,t_enc_k,u_requested,u_actual,processor_power_w,fan_power_w,fan_airflow_m3s,"
    "solar_power_w,energy_charged_j,energy_discharged_j,stored_energy_j,available,work_done,"
    "powered,energy_drained_j,solar_used_j";

std::string format_trajectory(const std::vector<StepRecord>& trajectory);
std::vector<StepRecord> parse_trajectory(std::string_view text, std::string_view origin = "<trajectory>");

std::string format_metrics(const MetricsReport& metrics);
MetricsReport parse_metrics(std::string_view text);

inline constexpr std::string_view kPlanHeader = "slot_start_iso8601,utilization";

std::string format_plan(const SchedulePlan& plan);
/// Slot length comes from the spacing of the rows; a single row means one hour.
SchedulePlan parse_plan(std::string_view text, std::string_view origin = "<plan>");
SchedulePlan parse_plan_file(const std::filesystem::path& file);

/// One configuration evaluated in one season.
struct SweepRow {
  std::string insulation;
  std::string cooling;
  double utilization = 0.0;
  std::string season;
  std::optional<double> energy_efficiency;  // "NA" on disk
  double availability = 0.0;
  double work_rate = 0.0;
  double total_work = 0.0;
  double fan_energy = 0.0;      // J
  double compute_energy = 0.0;  // J
  bool feasible = false;
  int rank = 0;
  bool selected = false;

  bool operator==(const SweepRow&) const = default;
};

inline constexpr std::string_view kSweepHeader =
    "insulation,cooling,utilization,season,energy_efficiency,availability,work_rate,total_work,"
    "fan_energy_j,compute_energy_j,feasible,rank,selected";

std::vector<SweepRow> sweep_rows(const DesignSpace& space, const Selection& selection);
std::string format_sweep(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_sweep(std::string_view text, std::string_view origin = "<sweep>");

/// Whole file as a string; throws std::runtime_error naming the path.
std::string read_file(const std::filesystem::path& file);
/// Truncates and writes, creating parent directories.
void write_file(const std::filesystem::path& file, std::string_view content);

}  // namespace thermosim
