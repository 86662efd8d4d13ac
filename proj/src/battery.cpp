#include "thermosim/battery.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thermosim {

using units::celsius_to_kelvin;

void BatterySpec::validate() const {
  if (!(nominal_capacity > 0.0)) throw std::invalid_argument("battery capacity must be > 0");
  if (!(reference_discharge_power > 0.0)) {
    throw std::invalid_argument("reference discharge power must be > 0");
  }
  if (max_charge_power < 0.0) throw std::invalid_argument("max charge power must be >= 0");
  if (!(min_soc_fraction >= 0.0 && min_soc_fraction < 1.0)) {
    throw std::invalid_argument("min_soc_fraction must be in [0, 1)");
  }
  if (!(discharge_floor_temp < charge_floor_temp && charge_floor_temp < shutdown_temp)) {
    throw std::invalid_argument(
        "battery temperatures must satisfy discharge floor < charge floor < shutdown");
  }
  if (!(charge_efficiency > 0.0 && charge_efficiency <= 1.0)) {
    throw std::invalid_argument("charge efficiency must be in (0, 1]");
  }
  if (temp_capacity_curve.empty() || discharge_factor_curve.empty() ||
      charge_rate_curve.empty()) {
    throw std::invalid_argument("battery curves must not be empty");
  }
  make_thermal_mass(thermal.mass, thermal.specific_heat);
}

EmpiricalCurve default_temp_capacity_curve() {
  return EmpiricalCurve({{celsius_to_kelvin(-20.0), 0.50},
                         {celsius_to_kelvin(0.0), 0.80},
                         {celsius_to_kelvin(25.0), 1.00}});
}

EmpiricalCurve default_discharge_factor_curve() {
  return EmpiricalCurve({{0.0, 1.20}, {1.0, 1.00}, {2.0, 0.80}, {3.5, 0.50}});
}

EmpiricalCurve default_charge_rate_curve() {
  return EmpiricalCurve({{celsius_to_kelvin(0.0), 0.0},
                         {celsius_to_kelvin(5.0), 0.80},
                         {celsius_to_kelvin(25.0), 1.00}});
}

BatterySpec make_battery(double nominal_capacity, double reference_discharge_power,
                         double max_charge_power, ThermalMass thermal) {
  BatterySpec spec{};
  spec.nominal_capacity = nominal_capacity;
  spec.reference_discharge_power = reference_discharge_power;
  spec.max_charge_power = max_charge_power;
  spec.temp_capacity_curve = default_temp_capacity_curve();
  spec.discharge_factor_curve = default_discharge_factor_curve();
  spec.charge_rate_curve = default_charge_rate_curve();
  spec.thermal = thermal;
  spec.validate();
  return spec;
}

SafetyGate safety_gate(const BatterySpec& spec, double t) {
  return {spec.discharge_floor_temp <= t && t < spec.shutdown_temp,
          spec.charge_floor_temp < t && t < spec.shutdown_temp};
}

double usable_capacity_fraction(const BatterySpec& spec, double t) {
  if (t >= spec.shutdown_temp) return 0.0;
  return spec.temp_capacity_curve(t);
}

double discharge_factor(const BatterySpec& spec, double power_draw) {
  if (power_draw < 0.0) throw std::invalid_argument("power draw must be >= 0");
  return spec.discharge_factor_curve(power_draw / spec.reference_discharge_power);
}

double max_charge_fraction(const BatterySpec& spec, double t) {
  if (t <= spec.charge_floor_temp || t >= spec.shutdown_temp) return 0.0;
  return spec.charge_rate_curve(t);
}

double extraction_efficiency(const BatterySpec& spec, double t, double power_draw) {
  return std::min(1.0, usable_capacity_fraction(spec, t) * discharge_factor(spec, power_draw));
}

double available_energy(const BatterySpec& spec, const BatteryState& state, double power_draw) {
  if (!safety_gate(spec, state.temperature).discharge_allowed) return 0.0;
  const double above_reserve = std::max(0.0, state.stored_energy - spec.reserve());
  return above_reserve * extraction_efficiency(spec, state.temperature, power_draw);
}

DischargeResult discharge(const BatterySpec& spec, const BatteryState& state, double power_draw,
                          double dt) {
  if (power_draw < 0.0) throw std::invalid_argument("power draw must be >= 0");
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  if (!safety_gate(spec, state.temperature).discharge_allowed) {
    return {0.0, 0.0, state, true};
  }
  const double eff = extraction_efficiency(spec, state.temperature, power_draw);
  const double delivered = std::min(power_draw * dt, available_energy(spec, state, power_draw));
  if (delivered <= 0.0) return {0.0, 0.0, state, false};
  double drained = delivered / eff;
  BatteryState next = state;
  next.stored_energy = state.stored_energy - drained;
  if (next.stored_energy < spec.reserve()) {
    // Rounding only: delivered never exceeds (stored - reserve) * eff.
    drained = state.stored_energy - spec.reserve();
    next.stored_energy = spec.reserve();
  }
  return {delivered, drained, next, false};
}

ChargeResult charge(const BatterySpec& spec, const BatteryState& state, double offered_power,
                    double dt) {
  if (offered_power < 0.0) throw std::invalid_argument("offered power must be >= 0");
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  if (!safety_gate(spec, state.temperature).charge_allowed) return {0.0, 0.0, state};
  const double rate_cap = spec.max_charge_power * max_charge_fraction(spec, state.temperature);
  const double input = std::min(offered_power, rate_cap) * dt;
  const double headroom = std::max(0.0, spec.nominal_capacity - state.stored_energy);
  const double accepted = std::min(input * spec.charge_efficiency, headroom);
  BatteryState next = state;
  next.stored_energy = state.stored_energy + accepted;
  return {accepted, accepted / spec.charge_efficiency, next};
}

}  // namespace thermosim
