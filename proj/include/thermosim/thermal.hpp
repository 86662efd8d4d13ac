#pragma once

#include <optional>
#include <stdexcept>

#include "thermosim/units.hpp"

namespace thermosim {

/// Series wall construction: inner film, conducting layer, outer film.
struct WallConstruction {
  double h_inner;       // W/(m^2 K)
  double thickness;     // m
  double conductivity;  // W/(m K)
  double h_outer;       // W/(m^2 K)
};

/// Cubic enclosure. The heat transfer coefficient is either derived from a
/// wall construction or given directly (which bypasses the series formula).
class EnclosureSpec {
 public:
  static EnclosureSpec from_wall(double side_length, WallConstruction wall);
  static EnclosureSpec from_u(double side_length, double u);

  double side_length() const { return side_length_; }
  double volume() const { return side_length_ * side_length_ * side_length_; }
  const std::optional<WallConstruction>& wall() const { return wall_; }
  const std::optional<double>& direct_u() const { return direct_u_; }

 private:
  EnclosureSpec(double side_length, std::optional<WallConstruction> wall,
                std::optional<double> u)
      : side_length_(side_length), wall_(wall), direct_u_(u) {}

  double side_length_;
  std::optional<WallConstruction> wall_;
  std::optional<double> direct_u_;
};

struct ThermalMass {
  double mass;           // kg
  double specific_heat;  // J/(kg K)

  double capacity() const { return mass * specific_heat; }
};

ThermalMass make_thermal_mass(double mass, double specific_heat);

inline constexpr double kDryAirGasConstant = 287.058;  // J/(kg K)
inline constexpr double kAirSpecificHeat = 717.0;      // J/(kg K), constant volume

struct AirState {
  double pressure = units::kStandardAtmosphere;  // Pa
  double temperature = units::celsius_to_kelvin(25.0);
  double gas_constant = kDryAirGasConstant;
};

/// Fan operating point on the cubic affinity curve.
struct FanSpec {
  double rated_power;    // W at rated_airflow
  double rated_airflow;  // m^3/s
  double max_airflow;    // m^3/s
};

FanSpec make_fan(double rated_power, double rated_airflow, double max_airflow);

// Fixed moving-air properties used on the fan path (20 C air, 1 kJ/(kg K)).
inline constexpr double kFanAirDensity = 1.20;
inline constexpr double kFanAirSpecificHeat = 1000.0;

/// Lumped enclosure contents. m_enc * C_enc is stored as `heat_capacity`
/// so the product is exact rather than recomputed from an average.
struct EnclosureThermalState {
  double temperature;    // K
  double mass;           // kg
  double heat_capacity;  // J/K, sum of m_i C_i

  double specific_heat() const { return heat_capacity / mass; }
};

class UnstableStepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double surface_area(const EnclosureSpec& spec);

/// 1/U = 1/h_i + d/k + 1/h_o, or the configured U.
double combined_heat_transfer_coefficient(const EnclosureSpec& spec);

double air_density(const AirState& air);

/// Air sealed into the enclosure at 25 C and 1 atm; not recomputed later.
ThermalMass enclosure_air(const EnclosureSpec& spec);

struct Aggregate {
  double mass;
  double specific_heat;
  double heat_capacity;
};

Aggregate enclosure_aggregate(const ThermalMass& air, const ThermalMass& battery,
                              const ThermalMass& processor);

/// Positive when heat flows into the enclosure.
double heat_transfer_rate(double u, double area, double t_ambient, double t_enclosure);

/// Explicit Euler step with the transfer rate frozen over the step.
double step_enclosure_temperature(const EnclosureThermalState& state, double q_transfer,
                                  double processor_power, double q_dissipated, double dt);

/// Largest step that keeps the explicit scheme monotone: 0.1 * mC / (UA).
double max_stable_step(double heat_capacity, double u, double area);

/// Throws UnstableStepError when dt exceeds max_stable_step.
void check_step(double heat_capacity, double u, double area, double dt);

double equilibrium_temperature(double u, double area, double t_ambient,
                               double processor_power, double q_dissipated);

/// Volumetric airflow needed to carry `p_diss` watts at a given air temperature rise.
double required_airflow(double p_diss, double density = kFanAirDensity,
                        double specific_heat = kFanAirSpecificHeat, double delta_t_air = 10.0);

class FanCapacityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Cubic law P_j = P_i (AF_j / AF_i)^3. Throws FanCapacityError above max_airflow.
double fan_power(const FanSpec& fan, double airflow);

}  // namespace thermosim
