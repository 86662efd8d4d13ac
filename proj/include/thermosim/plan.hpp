#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thermosim/trace.hpp"

namespace thermosim {

/// Per-slot utilization over a horizon. Slot i covers
/// [start + i * slot_seconds, start + (i + 1) * slot_seconds).
struct SchedulePlan {
  EpochSeconds start = 0;
  std::int64_t slot_seconds = 3600;
  std::vector<double> utilization;

  std::size_t slot_of(EpochSeconds t) const;
  EpochSeconds end() const {
    return start + slot_seconds * static_cast<std::int64_t>(utilization.size());
  }
  /// Utilization-seconds requested by the plan.
  double requested_utilization_seconds() const;

  bool operator==(const SchedulePlan&) const = default;
};

/// Highest stage whose cost fits the budget; 0 (skip) when none does.
/// `stage_costs[k]` is the cost of stage k + 1.
int select_exit_stage(double budget, std::span<const double> stage_costs);

}  // namespace thermosim
