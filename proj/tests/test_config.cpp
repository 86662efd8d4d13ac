#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "support.hpp"
#include "thermosim/config.hpp"
#include "thermosim/csv_io.hpp"

using namespace thermosim;
namespace fs = std::filesystem;
using doctest::Approx;

namespace {

fs::path scratch(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "thermosim_config_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

const char* kMinimal = R"({
  "enclosure": {"side_length_m": 0.1315, "u_w_m2k": 2.0},
  "battery": {"capacity_wh": 100, "reference_discharge_power_w": 5, "max_charge_power_w": 10,
              "mass_kg": 0.2, "specific_heat_j_kgk": 1000},
  "processor": {"base_power_w": 1, "max_power_w": 10, "mass_kg": 0.25, "specific_heat_j_kgk": 900},
  "traces": {"temperature_constant_c": 20, "solar_constant_w": 0},
  "policy": {"type": "constant", "utilization": 0.5},
  "start": "2024-01-15T12:00:00Z",
  "duration_h": 2,
  "step_s": 60
})";

std::string with(const std::string& from, const std::string& to) {
  std::string s = kMinimal;
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST_CASE("minimal scenario") {
  const auto sc = load_scenario(scratch("min.json", kMinimal));
  CHECK(sc.battery.nominal_capacity == Approx(360000.0));
  CHECK(sc.duration_seconds == 7200);
  CHECK(sc.initial_energy == sc.battery.nominal_capacity);
  CHECK_FALSE(sc.fan.has_value());
  CHECK(run(sc).trajectory.size() == 120);
}

TEST_CASE("unit variants") {
  std::string big = with("\"side_length_m\": 0.1315", "\"side_length_ft\": 8");
  big.replace(big.find("\"step_s\": 60"), 12, "\"step_s\": 10");
  const auto ft = load_scenario(scratch("ft.json", big));
  CHECK(ft.enclosure.side_length() == Approx(2.4384));
  const auto kwh = load_scenario(
      scratch("kwh.json", with("\"capacity_wh\": 100", "\"capacity_kwh\": 20")));
  CHECK(kwh.battery.nominal_capacity == Approx(7.2e7));
  const auto wall = load_scenario(scratch(
      "wall.json", with("\"u_w_m2k\": 2.0",
                        "\"wall\": {\"h_inner_w_m2k\": 10, \"thickness_m\": 0.03175, "
                        "\"conductivity_w_mk\": 0.04, \"h_outer_w_m2k\": 25}")));
  CHECK(combined_heat_transfer_coefficient(wall.enclosure) == Approx(1.0710).epsilon(1e-4));
}

TEST_CASE("errors name the file and key") {
  CHECK_THROWS_WITH_AS(load_scenario(scratch("unknown.json", with("\"step_s\": 60", "\"step_s\": 60, \"stepz\": 1"))),
                       doctest::Contains("stepz"), ConfigError);
  CHECK_THROWS_WITH_AS(
      load_scenario(scratch("nested.json", with("\"u_w_m2k\": 2.0", "\"u_w_m2k\": 2.0, \"colour\": 1"))),
      doctest::Contains("enclosure.colour"), ConfigError);
  CHECK_THROWS_WITH_AS(load_scenario(scratch("missing.json", with("\"max_power_w\": 10", "\"max_power\": 10"))),
                       doctest::Contains("processor.max_power_w"), ConfigError);
  CHECK_THROWS_WITH_AS(load_scenario(scratch("type.json", with("\"step_s\": 60", "\"step_s\": \"60\""))),
                       doctest::Contains("step_s"), ConfigError);
  CHECK_THROWS_WITH_AS(load_scenario(scratch("both.json", with("\"u_w_m2k\": 2.0", "\"u_w_m2k\": 2.0, \"wall\": {}"))),
                       doctest::Contains("enclosure"), ConfigError);
  CHECK_THROWS_AS(load_scenario(scratch("bad.json", "{ nope")), ConfigError);
  CHECK_THROWS_WITH_AS(load_scenario(scratch("fname.json", "[]")), doctest::Contains("fname.json"),
                       ConfigError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/x.json"), ConfigError);
}

TEST_CASE("unit suffix audit") {
  const auto bad = scratch("suffix.json", R"({"length": 3, "side_length_m": 1, "utilization": 0.5,
                                             "inner": {"power": 2, "power_w": 2}})");
  const auto v = unit_suffix_violations(bad);
  CHECK(v.size() == 2);
  for (const auto& entry : fs::recursive_directory_iterator(data_dir())) {
    if (entry.path().extension() != ".json") continue;
    const auto found = unit_suffix_violations(entry.path());
    INFO(entry.path().string());
    CHECK(found.empty());
  }
}

TEST_CASE("every bundled fixture loads") {
  for (const char* f : {"scenarios/edge_datacenter.json", "scenarios/base_station.json",
                        "scenarios/edge_trainer.json", "scenarios/nano_node.json"}) {
    INFO(f);
    const auto sc = load_scenario(test::data(f));
    CHECK_NOTHROW(validate(sc));
  }
  const auto design = load_design_space(test::data("design/seasons_space.json"));
  CHECK(design.seasons.size() == 3);
  CHECK(enumerate(design.space).size() == 30);
  const auto obj = load_objective(test::data("design/availability_objective.json"));
  CHECK(obj.primary == Metric::Availability);
  CHECK(obj.min_operating_point == Approx(0.3));
  CHECK(load_horizon(test::data("horizons/day_night.json")).horizon.slots.size() == 24);
  CHECK(load_farmbeats(test::data("case_studies/farmbeats.json")).seasons.size() == 3);
  const auto me = load_multi_exit(test::data("case_studies/multiexit.json"));
  CHECK(me.spec.stage_costs.size() == 7);
}

TEST_CASE("winter season is stored in fahrenheit") {
  const auto design = load_design_space(test::data("design/seasons_space.json"));
  const auto& winter = design.seasons.front();
  REQUIRE(winter.name == "winter");
  double hi = 0;
  for (const auto& s : winter.temperature.samples()) hi = std::max(hi, s.value);
  CHECK(units::kelvin_to_celsius(hi) == Approx(-8.889).epsilon(1e-3));
}

TEST_CASE("curve files") {
  const auto c = load_curve(test::data("curves/datasheet_capacity_c.csv"), true);
  CHECK(c(units::celsius_to_kelvin(0.0)) == Approx(0.85));
  CHECK(c(units::celsius_to_kelvin(-30.0)) == Approx(0.60));
  CHECK_THROWS_WITH_AS(load_curve(scratch("c.csv", "x,y\n1,0.5\n0,0.6\n"), false),
                       doctest::Contains("increasing"), ConfigError);
  CHECK_THROWS_WITH_AS(load_curve(scratch("d.csv", "x,y\n1,abc\n"), false),
                       doctest::Contains("d.csv:2"), ConfigError);
  const auto sc = load_scenario(scratch(
      "curve.json",
      with("\"max_charge_power_w\": 10",
           "\"max_charge_power_w\": 10, \"capacity_curve_file\": \"" +
               test::data("curves/datasheet_capacity_c.csv").string() + "\"")));
  CHECK(usable_capacity_fraction(sc.battery, units::celsius_to_kelvin(0.0)) == Approx(0.85));
}

TEST_CASE("data directory override") {
  const fs::path dir = fs::temp_directory_path() / "thermosim_alt_data";
  fs::create_directories(dir);
  ::setenv(kDataDirVariable, dir.c_str(), 1);
  CHECK(data_dir() == dir);
  std::ofstream(dir / "only_here.txt") << "x";
  CHECK(resolve_path("only_here.txt", "/nonexistent") == dir / "only_here.txt");
  CHECK(resolve_path("/abs/path.csv", dir) == fs::path("/abs/path.csv"));
  ::unsetenv(kDataDirVariable);
  CHECK(data_dir() != dir);
}
