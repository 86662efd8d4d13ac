#pragma once

#include "thermosim/curve.hpp"
#include "thermosim/thermal.hpp"

namespace thermosim {

/// Empirical lithium battery. Temperatures in K, energies in J, powers in W.
/// Temperature curves take kelvin on the x axis; the discharge curve takes
/// the ratio of draw to `reference_discharge_power`.
struct BatterySpec {
  double nominal_capacity;           // J
  double reference_discharge_power;  // W, where the discharge factor is 1
  double max_charge_power;           // W at 25 C
  double min_soc_fraction = 0.40;
  double discharge_floor_temp = units::celsius_to_kelvin(-20.0);
  double charge_floor_temp = units::celsius_to_kelvin(0.0);
  double shutdown_temp = units::celsius_to_kelvin(60.0);
  EmpiricalCurve temp_capacity_curve;
  EmpiricalCurve discharge_factor_curve;
  EmpiricalCurve charge_rate_curve;
  ThermalMass thermal{1.0, 1000.0};
  double charge_efficiency = 1.0;

  /// Checks field ranges and temperature ordering; throws std::invalid_argument.
  void validate() const;
  double reserve() const { return min_soc_fraction * nominal_capacity; }
};

/// (-20 C, 0.50), (0 C, 0.80), (25 C, 1.00); flat above 25 C.
EmpiricalCurve default_temp_capacity_curve();
/// f(r) = 1.2 - 0.2 r, clamped to [0.5, 1.2].
EmpiricalCurve default_discharge_factor_curve();
/// 0 at 0 C, 0.80 at 5 C, 1.00 at 25 C; flat above.
EmpiricalCurve default_charge_rate_curve();

/// Spec with the default curves and limits filled in.
BatterySpec make_battery(double nominal_capacity, double reference_discharge_power,
                         double max_charge_power, ThermalMass thermal);

struct BatteryState {
  double stored_energy;  // J
  double temperature;    // K, the enclosure temperature
};

struct SafetyGate {
  bool discharge_allowed;
  bool charge_allowed;
};

SafetyGate safety_gate(const BatterySpec& spec, double temperature);

/// Fraction of stored energy that can be extracted at this temperature; 0 at shutdown.
double usable_capacity_fraction(const BatterySpec& spec, double temperature);
double discharge_factor(const BatterySpec& spec, double power_draw);
double max_charge_fraction(const BatterySpec& spec, double temperature);

/// Delivered joules per drained joule, never above 1.
double extraction_efficiency(const BatterySpec& spec, double temperature, double power_draw);

/// Energy deliverable above the min-SoC reserve at this draw; 0 when the gate is shut.
double available_energy(const BatterySpec& spec, const BatteryState& state, double power_draw);

struct DischargeResult {
  double delivered;  // J handed to the load
  double drained;    // J removed from storage (>= delivered)
  BatteryState state;
  bool unavailable;  // discharge gate closed
};

DischargeResult discharge(const BatterySpec& spec, const BatteryState& state,
                          double power_draw, double dt);

struct ChargeResult {
  double accepted;  // J added to storage
  double consumed;  // J of offered energy used to achieve it
  BatteryState state;
};

ChargeResult charge(const BatterySpec& spec, const BatteryState& state, double offered_power,
                    double dt);

}  // namespace thermosim
