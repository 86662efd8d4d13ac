#include "thermosim/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "thermosim/csv_io.hpp"
#include "thermosim/csv_util.hpp"

namespace thermosim {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path data_dir() {
  if (const char* env = std::getenv(kDataDirVariable); env && *env) return fs::path(env);
  return fs::path(THERMOSIM_DEFAULT_DATA_DIR);
}

fs::path resolve_path(const std::string& path, const fs::path& base_dir) {
  const fs::path p(path);
  if (p.is_absolute()) return p;
  if (fs::exists(base_dir / p)) return base_dir / p;
  return data_dir() / p;
}

namespace {

json read_json(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(file.string() + ": invalid JSON: " + e.what());
  }
}

// Keyed access to one JSON object that remembers what was read, so leftover
// keys can be rejected.
class Obj {
 public:
  Obj(const json& j, std::string path, const fs::path& file)
      : j_(j), path_(std::move(path)), file_(file) {
    if (!j_.is_object()) fail("", "expected an object");
  }

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    std::string where = path_;
    if (!key.empty()) where += (where.empty() ? "" : ".") + key;
    throw ConfigError(file_.string() + ": " + (where.empty() ? "<root>" : where) + ": " + msg);
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json& raw(const std::string& key) {
    if (!has(key)) fail(key, "missing required key");
    used_.insert(key);
    return j_.at(key);
  }

  double num(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) fail(key, "expected a number");
    return v.get<double>();
  }
  double num(const std::string& key, double fallback) { return has(key) ? num(key) : fallback; }
  std::optional<double> opt_num(const std::string& key) {
    return has(key) ? std::optional<double>(num(key)) : std::nullopt;
  }

  std::int64_t integer(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number_integer()) fail(key, "expected an integer");
    return v.get<std::int64_t>();
  }
  std::int64_t integer(const std::string& key, std::int64_t fallback) {
    return has(key) ? integer(key) : fallback;
  }

  std::string str(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }
  std::string str(const std::string& key, const std::string& fallback) {
    return has(key) ? str(key) : fallback;
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_boolean()) fail(key, "expected true or false");
    return v.get<bool>();
  }

  std::vector<double> numbers(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_array()) fail(key, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) fail(key, "expected an array of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  Obj obj(const std::string& key) { return Obj(raw(key), child(key), file_); }

  std::vector<Obj> objects(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_array()) fail(key, "expected an array of objects");
    std::vector<Obj> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.emplace_back(v[i], child(key) + "[" + std::to_string(i) + "]", file_);
    }
    return out;
  }

  fs::path file_path(const std::string& key) { return resolve_path(str(key), file_.parent_path()); }

  /// Rejects keys that were never read.
  void done() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) fail(key, "unknown key");
    }
  }

  // Runs `f`, prefixing any library validation error with this object's path.
  template <class F>
  auto guard(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      fail("", e.what());
    }
  }

  const fs::path& file() const { return file_; }

 private:
  std::string child(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json& j_;
  std::string path_;
  fs::path file_;
  std::set<std::string> used_;
};

// Exactly one of the given keys must be present; returns its index.
std::size_t one_of(const Obj& o, std::initializer_list<const char*> keys) {
  std::size_t found = keys.size(), count = 0, i = 0;
  std::string names;
  for (const char* k : keys) {
    if (o.has(k)) {
      found = i;
      ++count;
    }
    names += (i ? " | " : "") + std::string(k);
    ++i;
  }
  if (count != 1) o.fail("", "expected exactly one of " + names);
  return found;
}

double temperature_c(Obj& o, const std::string& key, double fallback_c) {
  return units::celsius_to_kelvin(o.num(key, fallback_c));
}

Trace load_temperature_trace(const fs::path& file, const std::string& unit) {
  const units::Unit from = units::parse_unit(unit);
  if (from == units::Unit::Celsius) return parse_trace(file, TraceKind::TemperatureCelsius);
  Trace raw = parse_trace(file, TraceKind::PowerWatts);
  std::vector<Trace::Sample> s = raw.samples();
  for (auto& x : s) x.value = units::convert(x.value, from, units::Unit::Kelvin);
  return Trace(std::move(s));
}

EnclosureSpec read_enclosure(Obj o) {
  const double side = one_of(o, {"side_length_m", "side_length_ft"}) == 0
                          ? o.num("side_length_m")
                          : units::feet_to_metres(o.num("side_length_ft"));
  EnclosureSpec spec = EnclosureSpec::from_u(1.0, 1.0);
  if (one_of(o, {"u_w_m2k", "wall"}) == 0) {
    const double u = o.num("u_w_m2k");
    spec = o.guard([&] { return EnclosureSpec::from_u(side, u); });
  } else {
    Obj w = o.obj("wall");
    WallConstruction wall{w.num("h_inner_w_m2k"), w.num("thickness_m"), w.num("conductivity_w_mk"),
                          w.num("h_outer_w_m2k")};
    w.done();
    spec = o.guard([&] { return EnclosureSpec::from_wall(side, wall); });
  }
  o.done();
  return spec;
}

FanSpec read_fan(Obj o) {
  const double p = o.num("rated_power_w"), af = o.num("rated_airflow_m3s");
  const double max = o.num("max_airflow_m3s", af);
  o.done();
  return o.guard([&] { return make_fan(p, af, max); });
}

BatterySpec read_battery(Obj o) {
  double capacity = 0.0;
  switch (one_of(o, {"capacity_wh", "capacity_kwh", "capacity_j"})) {
    case 0: capacity = units::convert(o.num("capacity_wh"), units::Unit::WattHour, units::Unit::Joule); break;
    case 1: capacity = units::convert(o.num("capacity_kwh"), units::Unit::KiloWattHour, units::Unit::Joule); break;
    default: capacity = o.num("capacity_j");
  }
  const double ref = o.num("reference_discharge_power_w");
  const double max_charge = o.num("max_charge_power_w");
  const double mass = o.num("mass_kg"), c = o.num("specific_heat_j_kgk");
  BatterySpec spec = o.guard([&] {
    return make_battery(capacity, ref, max_charge, make_thermal_mass(mass, c));
  });
  spec.min_soc_fraction = o.num("min_soc_fraction", spec.min_soc_fraction);
  spec.charge_efficiency = o.num("charge_efficiency", spec.charge_efficiency);
  spec.discharge_floor_temp = temperature_c(o, "discharge_floor_c", -20.0);
  spec.charge_floor_temp = temperature_c(o, "charge_floor_c", 0.0);
  spec.shutdown_temp = temperature_c(o, "shutdown_c", 60.0);
  if (o.has("capacity_curve_file")) {
    spec.temp_capacity_curve = load_curve(o.file_path("capacity_curve_file"), true);
  }
  if (o.has("discharge_curve_file")) {
    spec.discharge_factor_curve = load_curve(o.file_path("discharge_curve_file"), false);
  }
  if (o.has("charge_curve_file")) {
    spec.charge_rate_curve = load_curve(o.file_path("charge_curve_file"), true);
  }
  o.done();
  o.guard([&] { spec.validate(); return 0; });
  return spec;
}

ProcessorSpec read_processor(Obj o) {
  ProcessorSpec p{o.num("base_power_w"), o.num("max_power_w"),
                  static_cast<int>(o.integer("unit_count", 1)),
                  ThermalMass{o.num("mass_kg"), o.num("specific_heat_j_kgk")}};
  o.done();
  o.guard([&] {
    p.validate();
    make_thermal_mass(p.thermal.mass, p.thermal.specific_heat);
    return 0;
  });
  return p;
}

std::vector<double> read_stage_costs(Obj& o) {
  std::vector<double> costs = o.numbers("stage_costs_j");
  return costs;
}

Policy read_policy(Obj o, const ProcessorSpec& processor) {
  const std::string type = o.str("type");
  Policy policy;
  if (type == "constant") {
    policy = ConstantUtilization{o.num("utilization")};
  } else if (type == "duty_cycle") {
    policy = DutyCycleEnergyProportional{o.integer("recompute_s", 0)};
  } else if (type == "plan") {
    const fs::path file = o.file_path("file");
    policy = o.guard([&] { return PlannedSchedule{parse_plan_file(file)}; });
  } else if (type == "multi_exit") {
    MultiExitSpec spec;
    spec.round_seconds = o.integer("round_s", 3600);
    if (o.has("stage_costs_j")) {
      spec.stage_costs = read_stage_costs(o);
      for (std::size_t k = 1; k <= spec.stage_costs.size(); ++k) spec.stage_work.push_back(double(k));
    } else {
      spec = o.guard([&] { return default_multi_exit(processor, spec.round_seconds); });
    }
    const auto u = o.guard([&] { return stage_utilizations(spec, processor); });
    policy = MultiExitRounds{spec.stage_costs, u, spec.round_seconds};
  } else {
    o.fail("type", "unknown policy '" + type + "' (constant | duty_cycle | plan | multi_exit)");
  }
  o.done();
  return policy;
}

std::int64_t read_duration(Obj& o) {
  if (one_of(o, {"duration_h", "duration_s"}) == 1) return o.integer("duration_s");
  const double h = o.num("duration_h");
  const double s = h * 3600.0;
  if (s != std::floor(s)) o.fail("duration_h", "must be a whole number of seconds");
  return static_cast<std::int64_t>(s);
}

EpochSeconds read_time(Obj& o, const std::string& key) {
  const std::string text = o.str(key);
  try {
    return parse_iso8601(text);
  } catch (const std::exception& e) {
    o.fail(key, e.what());
  }
}

// Temperature and solar inputs: a file or a constant covering [from, to].
Trace read_temperature(Obj& o, EpochSeconds from, EpochSeconds to) {
  if (one_of(o, {"temperature_file", "temperature_constant_c"}) == 1) {
    return Trace::constant(from, to, units::celsius_to_kelvin(o.num("temperature_constant_c")));
  }
  const fs::path file = o.file_path("temperature_file");
  const std::string unit = o.str("temperature_unit", "C");
  return o.guard([&] { return load_temperature_trace(file, unit); });
}

Trace read_solar(Obj& o, EpochSeconds from, EpochSeconds to) {
  if (one_of(o, {"solar_file", "solar_constant_w"}) == 1) {
    return Trace::constant(from, to, o.num("solar_constant_w"));
  }
  const fs::path file = o.file_path("solar_file");
  return o.guard([&] { return parse_trace(file, TraceKind::PowerWatts); });
}

Season read_season(Obj o, EpochSeconds from, EpochSeconds to) {
  Season s;
  s.name = o.str("name");
  s.temperature = read_temperature(o, from, to);
  s.solar = read_solar(o, from, to);
  o.done();
  return s;
}

Scenario read_scenario(Obj& o) {
  Scenario sc;
  sc.name = o.str("name", o.file().stem().string());
  sc.enclosure = read_enclosure(o.obj("enclosure"));
  if (o.has("fan")) sc.fan = read_fan(o.obj("fan"));
  sc.battery = read_battery(o.obj("battery"));
  sc.processor = read_processor(o.obj("processor"));
  sc.start = read_time(o, "start");
  sc.duration_seconds = read_duration(o);
  sc.step_seconds = o.integer("step_s", 60);
  {
    Obj t = o.obj("traces");
    sc.temperature = read_temperature(t, sc.start, sc.end());
    sc.solar = read_solar(t, sc.start, sc.end());
    t.done();
  }
  sc.policy = o.has("policy") ? read_policy(o.obj("policy"), sc.processor)
                              : Policy{ConstantUtilization{0.5}};
  if (o.has("initial_temperature_c") && o.has("initial_temperature_at_ambient")) {
    o.fail("", "give either initial_temperature_c or initial_temperature_at_ambient");
  }
  sc.initial_temperature = temperature_c(o, "initial_temperature_c", 25.0);
  sc.initial_temperature_is_ambient = o.boolean("initial_temperature_at_ambient", false);
  const double soc = o.num("initial_soc_fraction", 1.0);
  if (!(soc >= 0.0 && soc <= 1.0)) o.fail("initial_soc_fraction", "must be in [0, 1]");
  sc.initial_energy = soc * sc.battery.nominal_capacity;
  sc.fan_setpoint = temperature_c(o, "fan_setpoint_c", 25.0);
  sc.compute_cutoff = temperature_c(o, "compute_cutoff_c", 60.0);
  sc.compute_resume = temperature_c(o, "compute_resume_c", 55.0);
  sc.availability_threshold = o.num("availability_threshold", 0.0);
  sc.fan_heat_in_enclosure = o.boolean("fan_heat_in_enclosure", false);
  sc.pulldown_gain = o.num("pulldown_gain", 1.0);
  sc.pulldown_steps = o.num("pulldown_steps", 10.0);
  return sc;
}

PlanOptions read_plan_options(Obj o) {
  PlanOptions p;
  p.max_rounds = static_cast<int>(o.integer("max_rounds", p.max_rounds));
  p.quantum = o.num("quantum_utilization", p.quantum);
  p.min_utilization = o.num("min_utilization", p.min_utilization);
  p.max_utilization = o.num("max_utilization", p.max_utilization);
  o.done();
  return p;
}

// Case-study documents point at a scenario file and list the seasons.
Scenario referenced_scenario(Obj& o) {
  const fs::path file = o.file_path("scenario");
  return load_scenario(file);
}

std::vector<Season> read_seasons(Obj& o, const Scenario& base) {
  std::vector<Season> seasons;
  for (Obj s : o.objects("seasons")) seasons.push_back(read_season(std::move(s), base.start, base.end()));
  if (seasons.empty()) o.fail("seasons", "at least one season is required");
  return seasons;
}

// Numeric keys with no unit: fractions, counts, ratios and policy knobs.
const std::set<std::string>& dimensionless_keys() {
  static const std::set<std::string> keys{
      "min_soc_fraction", "charge_efficiency", "unit_count",       "utilization",
      "availability_threshold", "initial_soc_fraction", "pulldown_gain", "pulldown_steps",
      "max_rounds",       "quantum_utilization", "min_utilization", "max_utilization",
      "operating_points", "demand_utilization", "target_percent",   "data_rate_at_max",
      "stage_work"};
  return keys;
}

const std::vector<std::string>& unit_suffixes() {
  static const std::vector<std::string> s{"_m",  "_ft",   "_c",     "_f",      "_k",
                                          "_wh", "_kwh",  "_j",     "_w",      "_m3s",
                                          "_w_m2k", "_w_mk", "_kg", "_j_kgk", "_s",
                                          "_h",  "_fraction"};
  return s;
}

bool has_unit_suffix(const std::string& key) {
  for (const auto& s : unit_suffixes()) {
    if (key.size() > s.size() && key.compare(key.size() - s.size(), s.size(), s) == 0) return true;
  }
  return false;
}

void audit(const json& j, const std::string& path, std::vector<std::string>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const std::string here = path.empty() ? key : path + "." + key;
      const bool numeric =
          value.is_number() ||
          (value.is_array() && !value.empty() &&
           std::all_of(value.begin(), value.end(), [](const json& e) { return e.is_number(); }));
      if (numeric && !has_unit_suffix(key) && !dimensionless_keys().count(key)) {
        out.push_back(here);
      }
      audit(value, here, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) audit(j[i], path + "[" + std::to_string(i) + "]", out);
  }
}

}  // namespace

std::vector<std::string> unit_suffix_violations(const fs::path& file) {
  std::vector<std::string> out;
  audit(read_json(file), "", out);
  return out;
}

EmpiricalCurve load_curve(const fs::path& file, bool x_is_celsius) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto lines = csv::split_lines(text);
  if (lines.empty() || csv::trim(lines[0].text) != "x,y") {
    throw ConfigError(file.string() + ":1: expected header 'x,y'");
  }
  std::vector<EmpiricalCurve::Point> pts;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = csv::split_fields(lines[i].text);
    try {
      if (f.size() != 2) throw std::invalid_argument("expected 2 fields");
      double x = csv::parse_double(csv::trim(f[0]));
      if (x_is_celsius) x = units::celsius_to_kelvin(x);
      pts.push_back({x, csv::parse_double(csv::trim(f[1]))});
    } catch (const std::exception& e) {
      throw ConfigError(file.string() + ":" + std::to_string(lines[i].number) + ": " + e.what());
    }
  }
  try {
    return EmpiricalCurve(std::move(pts));
  } catch (const std::exception& e) {
    throw ConfigError(file.string() + ": " + e.what());
  }
}

Scenario load_scenario(const fs::path& file) {
  const json j = read_json(file);
  Obj o(j, "", file);
  Scenario sc = read_scenario(o);
  o.done();
  o.guard([&] { validate(sc); return 0; });
  return sc;
}

DesignInputs load_design_space(const fs::path& file) {
  const json j = read_json(file);
  Obj o(j, "", file);
  DesignInputs in;
  for (Obj i : o.objects("insulations")) {
    InsulationOption opt;
    opt.label = i.str("label");
    if (one_of(i, {"u_w_m2k", "wall"}) == 0) {
      opt.u = i.num("u_w_m2k");
    } else {
      Obj w = i.obj("wall");
      opt.wall = WallConstruction{w.num("h_inner_w_m2k"), w.num("thickness_m"),
                                  w.num("conductivity_w_mk"), w.num("h_outer_w_m2k")};
      w.done();
    }
    i.done();
    in.space.insulations.push_back(opt);
  }
  for (Obj c : o.objects("coolings")) {
    CoolingOption opt;
    opt.label = c.str("label");
    if (c.has("fan")) opt.fan = read_fan(c.obj("fan"));
    c.done();
    in.space.coolings.push_back(opt);
  }
  in.space.operating_points = o.numbers("operating_points");
  // A window is only needed for seasons given as constants.
  EpochSeconds start = 0;
  std::int64_t duration = 0;
  if (o.has("start")) {
    start = read_time(o, "start");
    duration = read_duration(o);
  }
  for (Obj s : o.objects("seasons")) {
    if (!o.has("start") && (s.has("temperature_constant_c") || s.has("solar_constant_w"))) {
      s.fail("", "constant traces need start and duration_h on the design space");
    }
    in.seasons.push_back(read_season(std::move(s), start, start + duration));
  }
  o.done();
  o.guard([&] { enumerate(in.space); return 0; });
  return in;
}

Objective load_objective(const fs::path& file) {
  const json j = read_json(file);
  Obj o(j, "", file);
  Objective obj;
  obj.primary = o.guard([&] { return parse_metric(o.str("primary")); });
  obj.target = o.num("target_percent", 100.0);
  obj.min_operating_point = o.num("min_utilization", 0.0);
  if (o.has("binding_seasons")) {
    for (const auto& s : o.raw("binding_seasons")) {
      if (!s.is_string()) o.fail("binding_seasons", "expected season names");
      obj.binding_seasons.push_back(s.get<std::string>());
    }
  }
  if (o.has("secondary")) {
    for (const auto& s : o.raw("secondary")) {
      if (!s.is_string()) o.fail("secondary", "expected metric names");
      obj.secondary.push_back(o.guard([&] { return parse_metric(s.get<std::string>()); }));
    }
  }
  o.done();
  return obj;
}

HorizonInputs load_horizon(const fs::path& file) {
  const json j = read_json(file);
  Obj o(j, "", file);
  HorizonInputs in;
  ForecastHorizon& h = in.horizon;
  h.start = read_time(o, "start");
  h.slot_seconds = o.integer("slot_s", 3600);
  if (h.slot_seconds <= 0) o.fail("slot_s", "must be positive");
  if (o.has("slots")) {
    for (Obj s : o.objects("slots")) {
      h.slots.push_back({units::celsius_to_kelvin(s.num("temperature_c")), s.num("solar_w"),
                         s.num("demand_utilization")});
      s.done();
    }
  } else {
    const std::int64_t duration = read_duration(o);
    const std::size_t n = static_cast<std::size_t>(duration / h.slot_seconds);
    const EpochSeconds end = h.start + duration;
    const Trace temp = read_temperature(o, h.start, end);
    const Trace solar = read_solar(o, h.start, end);
    const json& d = o.raw("demand_utilization");
    std::vector<double> demand;
    if (d.is_number()) {
      demand.assign(n, d.get<double>());
    } else if (d.is_array() && d.size() == n) {
      for (const auto& e : d) {
        if (!e.is_number()) o.fail("demand_utilization", "expected numbers");
        demand.push_back(e.get<double>());
      }
    } else {
      o.fail("demand_utilization", "expected a number or one number per slot");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const EpochSeconds t = h.start + h.slot_seconds * static_cast<std::int64_t>(i);
      o.guard([&] {
        h.slots.push_back({temp.at(t), solar.at(t), demand[i]});
        return 0;
      });
    }
  }
  if (o.has("planner")) in.options = read_plan_options(o.obj("planner"));
  o.done();
  if (h.slots.empty()) o.fail("", "horizon has no slots");
  return in;
}

Season load_season(const fs::path& temperature_file, const fs::path& solar_file, std::string name,
                   const std::string& temperature_unit) {
  return {std::move(name), load_temperature_trace(temperature_file, temperature_unit),
          parse_trace(solar_file, TraceKind::PowerWatts)};
}

FarmbeatsInputs load_farmbeats(const fs::path& file) {
  const json j = read_json(file);
  Obj o(j, "", file);
  FarmbeatsInputs in;
  in.base = referenced_scenario(o);
  in.seasons = read_seasons(o, in.base);
  Obj r = o.obj("router");
  in.router.router_base_power = r.num("base_power_w", in.router.router_base_power);
  in.router.router_max_power = r.num("max_power_w", in.router.router_max_power);
  in.router.data_rate_at_max = r.num("data_rate_at_max", in.router.data_rate_at_max);
  in.router.platform_power = r.num("platform_power_w", in.router.platform_power);
  in.router.thermal = {r.num("mass_kg", in.router.thermal.mass),
                       r.num("specific_heat_j_kgk", in.router.thermal.specific_heat)};
  r.done();
  r.guard([&] { in.router.load(); return 0; });
  if (o.has("planner")) in.options = read_plan_options(o.obj("planner"));
  o.done();
  return in;
}

MultiExitInputs load_multi_exit(const fs::path& file) {
  const json j = read_json(file);
  Obj o(j, "", file);
  MultiExitInputs in;
  in.base = referenced_scenario(o);
  in.seasons = read_seasons(o, in.base);
  const std::int64_t round = o.integer("round_s", 3600);
  if (o.has("stage_costs_j")) {
    in.spec.round_seconds = round;
    in.spec.stage_costs = read_stage_costs(o);
    in.spec.stage_work = o.has("stage_work") ? o.numbers("stage_work") : std::vector<double>{};
    if (in.spec.stage_work.empty()) {
      for (std::size_t k = 1; k <= in.spec.stage_costs.size(); ++k) {
        in.spec.stage_work.push_back(double(k));
      }
    }
  } else {
    in.spec = o.guard([&] { return default_multi_exit(in.base.processor, round); });
  }
  o.guard([&] {
    in.spec.validate();
    stage_utilizations(in.spec, in.base.processor);
    return 0;
  });
  if (o.has("planner")) in.options = read_plan_options(o.obj("planner"));
  o.done();
  return in;
}

}  // namespace thermosim
