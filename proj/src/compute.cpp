#include "thermosim/compute.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace thermosim {

void ProcessorSpec::validate() const {
  if (!(base_power >= 0.0 && base_power <= max_power)) {
    throw std::invalid_argument("processor power must satisfy 0 <= base <= max");
  }
  if (unit_count < 1) throw std::invalid_argument("processor unit_count must be >= 1");
  make_thermal_mass(thermal.mass, thermal.specific_heat);
}

OperatingPoint::OperatingPoint(double u) : u_(u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("utilization " + std::to_string(u) + " outside [0, 1]");
  }
}

double power_at(const ProcessorSpec& spec, OperatingPoint u) {
  return spec.unit_count * (spec.base_power + u.value() * (spec.max_power - spec.base_power));
}

double work_rate(const ProcessorSpec& spec, OperatingPoint u) {
  return spec.unit_count * u.value();
}

double heat_output(const ProcessorSpec& spec, OperatingPoint u) { return power_at(spec, u); }

}  // namespace thermosim
