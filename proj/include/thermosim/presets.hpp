#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thermosim/thermal.hpp"

namespace thermosim {

/// Small insulated box around a 1-10 W embedded board and its battery. The
/// side length is chosen so that 10 W at 10 C ambient settles near 100 C with
/// k = 0.04 W/(m K).
struct PrototypeBox {
  double side_length = 0.1315;   // m
  double h_inner = 10.0;         // W/(m^2 K)
  double thickness = 0.03175;    // m, 1.25 in
  double h_outer = 25.0;         // W/(m^2 K)
  ThermalMass board{0.25, 900.0};
  ThermalMass battery{0.20, 1000.0};

  EnclosureSpec enclosure(double conductivity) const;
  /// Air plus board plus battery.
  Aggregate contents(double conductivity) const;
};

struct WarmupSample {
  double time;         // s since start
  double temperature;  // K
};

struct WarmupCurve {
  std::string series;  // e.g. "t_amb_c=5"
  double t_ambient;    // K
  double conductivity;
  double power;        // W
  std::vector<WarmupSample> samples;
};

struct WarmupOptions {
  double initial_temperature = units::celsius_to_kelvin(0.0);
  double duration = 12.0 * 3600.0;  // s
  double step = 30.0;               // s
  double sample_every = 600.0;      // s
};

/// "fig6a": ambient 5/10/15/20 C; "fig6b": k 0.02/0.04/0.08; "fig6c": power
/// 0/2.5/5/10 W. Fixed values: 10 C ambient, k = 0.04, no power.
std::vector<WarmupCurve> warmup_family(std::string_view preset, const PrototypeBox& box = {},
                                   const WarmupOptions& options = {});

/// `series,time_s,t_enc_c`, one row per sample.
std::string format_warmup_curves(const std::vector<WarmupCurve>& curves);

}  // namespace thermosim
