#include "thermosim/plan.hpp"

#include <numeric>
#include <stdexcept>

namespace thermosim {

std::size_t SchedulePlan::slot_of(EpochSeconds t) const {
  if (t < start || t >= end()) {
    throw std::out_of_range("time " + format_iso8601(t) + " outside schedule plan");
  }
  return static_cast<std::size_t>((t - start) / slot_seconds);
}

double SchedulePlan::requested_utilization_seconds() const {
  return std::accumulate(utilization.begin(), utilization.end(), 0.0) *
         static_cast<double>(slot_seconds);
}

int select_exit_stage(double budget, std::span<const double> stage_costs) {
  int stage = 0;
  for (std::size_t k = 0; k < stage_costs.size(); ++k) {
    if (stage_costs[k] <= budget) stage = static_cast<int>(k) + 1;
  }
  return stage;
}

}  // namespace thermosim
