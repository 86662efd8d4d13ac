#include "thermosim/presets.hpp"

#include <cmath>
#include <stdexcept>

#include "thermosim/csv_util.hpp"

namespace thermosim {

EnclosureSpec PrototypeBox::enclosure(double conductivity) const {
  return EnclosureSpec::from_wall(side_length, {h_inner, thickness, conductivity, h_outer});
}

Aggregate PrototypeBox::contents(double conductivity) const {
  const EnclosureSpec e = enclosure(conductivity);
  return enclosure_aggregate(enclosure_air(e), battery, board);
}

namespace {

WarmupCurve trace_curve(std::string series, double t_amb, double k, double power,
                      const PrototypeBox& box, const WarmupOptions& opt) {
  const EnclosureSpec e = box.enclosure(k);
  const double u = combined_heat_transfer_coefficient(e);
  const double area = surface_area(e);
  const Aggregate c = box.contents(k);
  check_step(c.heat_capacity, u, area, opt.step);

  WarmupCurve curve{std::move(series), t_amb, k, power, {}};
  EnclosureThermalState s{opt.initial_temperature, c.mass, c.heat_capacity};
  const auto steps = static_cast<long>(std::llround(opt.duration / opt.step));
  const auto every = static_cast<long>(std::llround(opt.sample_every / opt.step));
  if (every <= 0) throw std::invalid_argument("sample interval shorter than the step");
  for (long i = 0; i <= steps; ++i) {
    if (i % every == 0) curve.samples.push_back({double(i) * opt.step, s.temperature});
    if (i == steps) break;
    const double q = heat_transfer_rate(u, area, t_amb, s.temperature);
    s.temperature = step_enclosure_temperature(s, q, power, 0.0, opt.step);
  }
  return curve;
}

std::string number(double v) { return csv::format_double(v); }

}  // namespace

std::vector<WarmupCurve> warmup_family(std::string_view preset, const PrototypeBox& box,
                                   const WarmupOptions& opt) {
  using units::celsius_to_kelvin;
  const double t10 = celsius_to_kelvin(10.0);
  std::vector<WarmupCurve> out;
  if (preset == "fig6a") {
    for (double c : {5.0, 10.0, 15.0, 20.0}) {
      out.push_back(trace_curve("t_amb_c=" + number(c), celsius_to_kelvin(c), 0.04, 0.0, box, opt));
    }
  } else if (preset == "fig6b") {
    for (double k : {0.02, 0.04, 0.08}) {
      out.push_back(trace_curve("k_w_mk=" + number(k), t10, k, 0.0, box, opt));
    }
  } else if (preset == "fig6c") {
    for (double p : {0.0, 2.5, 5.0, 10.0}) {
      out.push_back(trace_curve("power_w=" + number(p), t10, 0.04, p, box, opt));
    }
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(preset) +
                                "' (fig6a | fig6b | fig6c)");
  }
  return out;
}

std::string format_warmup_curves(const std::vector<WarmupCurve>& curves) {
  std::string out = "series,time_s,t_enc_c\n";
  for (const auto& c : curves) {
    for (const auto& s : c.samples) {
      out += c.series + ',' + number(s.time) + ',' + number(units::kelvin_to_celsius(s.temperature)) + '\n';
    }
  }
  return out;
}

}  // namespace thermosim
