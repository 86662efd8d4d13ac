#include "thermosim/units.hpp"

#include <array>
#include <utility>

namespace thermosim::units {

namespace {

enum class Dimension { Temperature, Energy, Length };

Dimension dimension_of(Unit u) {
  switch (u) {
    case Unit::Celsius:
    case Unit::Fahrenheit:
    case Unit::Kelvin:
      return Dimension::Temperature;
    case Unit::WattHour:
    case Unit::KiloWattHour:
    case Unit::Joule:
      return Dimension::Energy;
    case Unit::Foot:
    case Unit::Metre:
      return Dimension::Length;
  }
  throw UnitError("unknown unit");
}

// Maps a value onto the SI base unit of its dimension.
double to_base(double v, Unit u) {
  switch (u) {
    case Unit::Celsius: return celsius_to_kelvin(v);
    case Unit::Fahrenheit: return celsius_to_kelvin(fahrenheit_to_celsius(v));
    case Unit::Kelvin: return v;
    case Unit::WattHour: return wh_to_joules(v);
    case Unit::KiloWattHour: return wh_to_joules(v * 1000.0);
    case Unit::Joule: return v;
    case Unit::Foot: return feet_to_metres(v);
    case Unit::Metre: return v;
  }
  throw UnitError("unknown unit");
}

double from_base(double v, Unit u) {
  switch (u) {
    case Unit::Celsius: return kelvin_to_celsius(v);
    case Unit::Fahrenheit: return celsius_to_fahrenheit(kelvin_to_celsius(v));
    case Unit::Kelvin: return v;
    case Unit::WattHour: return joules_to_wh(v);
    case Unit::KiloWattHour: return joules_to_wh(v) / 1000.0;
    case Unit::Joule: return v;
    case Unit::Foot: return v / kMetresPerFoot;
    case Unit::Metre: return v;
  }
  throw UnitError("unknown unit");
}

constexpr std::array<std::pair<std::string_view, Unit>, 8> kNames{{
    {"C", Unit::Celsius},
    {"F", Unit::Fahrenheit},
    {"K", Unit::Kelvin},
    {"Wh", Unit::WattHour},
    {"kWh", Unit::KiloWattHour},
    {"J", Unit::Joule},
    {"ft", Unit::Foot},
    {"m", Unit::Metre},
}};

}  // namespace

Unit parse_unit(std::string_view name) {
  for (const auto& [n, u] : kNames) {
    if (n == name) return u;
  }
  throw UnitError("unsupported unit '" + std::string(name) + "'");
}

std::string_view unit_name(Unit u) {
  for (const auto& [n, v] : kNames) {
    if (v == u) return n;
  }
  return "?";
}

double convert(double value, Unit from, Unit to) {
  if (dimension_of(from) != dimension_of(to)) {
    throw UnitError("cannot convert " + std::string(unit_name(from)) + " to " +
                    std::string(unit_name(to)));
  }
  if (from == to) return value;
  return from_base(to_base(value, from), to);
}

}  // namespace thermosim::units
