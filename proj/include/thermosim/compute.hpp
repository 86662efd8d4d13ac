#pragma once

#include "thermosim/thermal.hpp"

namespace thermosim {

/// Affine power model per unit; `unit_count` identical units share one enclosure.
struct ProcessorSpec {
  double base_power;  // W per unit at u = 0
  double max_power;   // W per unit at u = 1
  int unit_count = 1;
  ThermalMass thermal{1.0, 500.0};

  void validate() const;
};

/// Utilization in [0, 1]. Construction rejects anything else.
class OperatingPoint {
 public:
  explicit OperatingPoint(double u);
  double value() const { return u_; }

 private:
  double u_;
};

double power_at(const ProcessorSpec& spec, OperatingPoint u);

/// Work units per second; one unit is one processor-second at full utilization.
double work_rate(const ProcessorSpec& spec, OperatingPoint u);

/// Electrical power becomes heat inside the enclosure.
double heat_output(const ProcessorSpec& spec, OperatingPoint u);

}  // namespace thermosim
