#pragma once

#include <filesystem>
#include <string>

#include "thermosim/battery.hpp"
#include "thermosim/config.hpp"
#include "thermosim/sim.hpp"

namespace thermosim::test {

inline std::filesystem::path data(const std::string& rel) { return data_dir() / rel; }

// Small embedded node built in code so tests do not depend on fixture edits.
inline Scenario nano(double ambient_c = 20.0, double solar_w = 0.0, double hours = 24.0) {
  Scenario sc;
  sc.name = "nano";
  sc.enclosure = EnclosureSpec::from_u(0.1315, 2.892);
  sc.fan = make_fan(0.2, 0.0013, 0.0039);
  sc.battery = make_battery(units::wh_to_joules(150.0), 5.5, 20.0, {0.2, 1000.0});
  sc.processor = ProcessorSpec{1.0, 10.0, 1, {0.25, 900.0}};
  sc.start = parse_iso8601("2024-01-15T12:00:00Z");
  sc.duration_seconds = static_cast<std::int64_t>(hours * 3600.0);
  sc.step_seconds = 60;
  sc.temperature = Trace::constant(sc.start, sc.end(), units::celsius_to_kelvin(ambient_c));
  sc.solar = Trace::constant(sc.start, sc.end(), solar_w);
  sc.policy = ConstantUtilization{0.5};
  sc.initial_temperature_is_ambient = true;
  sc.initial_energy = sc.battery.nominal_capacity;
  sc.fan_setpoint = units::celsius_to_kelvin(25.0);
  return sc;
}

}  // namespace thermosim::test
