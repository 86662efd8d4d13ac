#include "thermosim/thermal.hpp"

#include <cmath>
#include <string>

namespace thermosim {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

EnclosureSpec EnclosureSpec::from_wall(double side_length, WallConstruction wall) {
  require_positive(side_length, "side_length");
  require_positive(wall.h_inner, "h_inner");
  require_positive(wall.thickness, "wall thickness");
  require_positive(wall.conductivity, "wall conductivity");
  require_positive(wall.h_outer, "h_outer");
  return EnclosureSpec(side_length, wall, std::nullopt);
}

EnclosureSpec EnclosureSpec::from_u(double side_length, double u) {
  require_positive(side_length, "side_length");
  require_positive(u, "heat transfer coefficient");
  return EnclosureSpec(side_length, std::nullopt, u);
}

ThermalMass make_thermal_mass(double mass, double specific_heat) {
  require_positive(mass, "mass");
  require_positive(specific_heat, "specific heat");
  return {mass, specific_heat};
}

FanSpec make_fan(double rated_power, double rated_airflow, double max_airflow) {
  require_positive(rated_power, "fan rated power");
  require_positive(rated_airflow, "fan rated airflow");
  if (!(max_airflow >= rated_airflow)) {
    throw std::invalid_argument("fan max airflow must be at least the rated airflow");
  }
  return {rated_power, rated_airflow, max_airflow};
}

double surface_area(const EnclosureSpec& spec) {
  return 6.0 * spec.side_length() * spec.side_length();
}

double combined_heat_transfer_coefficient(const EnclosureSpec& spec) {
  if (spec.direct_u()) return *spec.direct_u();
  const auto& w = *spec.wall();
  const double resistance = 1.0 / w.h_inner + w.thickness / w.conductivity + 1.0 / w.h_outer;
  return 1.0 / resistance;
}

double air_density(const AirState& air) {
  return air.pressure / (air.gas_constant * air.temperature);
}

ThermalMass enclosure_air(const EnclosureSpec& spec) {
  const double rho = air_density(AirState{});
  return {rho * spec.volume(), kAirSpecificHeat};
}

Aggregate enclosure_aggregate(const ThermalMass& air, const ThermalMass& battery,
                              const ThermalMass& processor) {
  const double m = air.mass + battery.mass + processor.mass;
  const double mc = air.capacity() + battery.capacity() + processor.capacity();
  return {m, mc / m, mc};
}

double heat_transfer_rate(double u, double area, double t_ambient, double t_enclosure) {
  return u * area * (t_ambient - t_enclosure);
}

double step_enclosure_temperature(const EnclosureThermalState& state, double q_transfer,
                                  double processor_power, double q_dissipated, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  if (processor_power < 0.0) throw std::invalid_argument("processor power must be >= 0");
  if (q_dissipated < 0.0) throw std::invalid_argument("dissipated heat must be >= 0");
  const double net = q_transfer + processor_power - q_dissipated;
  return state.temperature + net * dt / state.heat_capacity;
}

double max_stable_step(double heat_capacity, double u, double area) {
  return 0.1 * heat_capacity / (u * area);
}

void check_step(double heat_capacity, double u, double area, double dt) {
  const double limit = max_stable_step(heat_capacity, u, area);
  if (dt > limit) {
    throw UnstableStepError("time step " + std::to_string(dt) + " s exceeds stability limit " +
                            std::to_string(limit) + " s");
  }
}

double equilibrium_temperature(double u, double area, double t_ambient, double processor_power,
                               double q_dissipated) {
  return t_ambient + (processor_power - q_dissipated) / (u * area);
}

double required_airflow(double p_diss, double density, double specific_heat,
                        double delta_t_air) {
  require_positive(density, "air density");
  require_positive(specific_heat, "air specific heat");
  if (!(delta_t_air > 0.0)) {
    throw FanCapacityError("fan cannot cool at or below ambient (air temperature rise <= 0)");
  }
  return p_diss / (density * specific_heat * delta_t_air);
}

double fan_power(const FanSpec& fan, double airflow) {
  if (airflow < 0.0) throw std::invalid_argument("airflow must be >= 0");
  if (airflow > fan.max_airflow) {
    throw FanCapacityError("airflow " + std::to_string(airflow) + " exceeds fan maximum " +
                           std::to_string(fan.max_airflow));
  }
  const double ratio = airflow / fan.rated_airflow;
  return fan.rated_power * ratio * ratio * ratio;
}

}  // namespace thermosim
