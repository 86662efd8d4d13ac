#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thermosim {

// Everything inside the library is SI: K, J, W, kg, m, s. Conversions
// happen only where configs and traces are read or written.
namespace units {

inline constexpr double kZeroCelsius = 273.15;
inline constexpr double kJoulesPerWh = 3600.0;
inline constexpr double kMetresPerFoot = 0.3048;
inline constexpr double kStandardAtmosphere = 101325.0;  // Pa

constexpr double celsius_to_kelvin(double c) { return c + kZeroCelsius; }
constexpr double kelvin_to_celsius(double k) { return k - kZeroCelsius; }
constexpr double fahrenheit_to_celsius(double f) { return (f - 32.0) * 5.0 / 9.0; }
constexpr double celsius_to_fahrenheit(double c) { return c * 9.0 / 5.0 + 32.0; }
constexpr double wh_to_joules(double wh) { return wh * kJoulesPerWh; }
constexpr double joules_to_wh(double j) { return j / kJoulesPerWh; }
constexpr double feet_to_metres(double ft) { return ft * kMetresPerFoot; }

enum class Unit { Celsius, Fahrenheit, Kelvin, WattHour, KiloWattHour, Joule, Foot, Metre };

class UnitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Unit parse_unit(std::string_view name);
std::string_view unit_name(Unit u);

/// Converts between units of the same dimension (temperature, energy, length).
/// Throws UnitError for cross-dimension pairs.
double convert(double value, Unit from, Unit to);

}  // namespace units
}  // namespace thermosim
