#include <doctest.h>

#include "support.hpp"
#include "thermosim/trace.hpp"

using namespace thermosim;
using doctest::Approx;

TEST_CASE("timestamps") {
  CHECK(parse_iso8601("1970-01-01T00:00:00Z") == 0);
  CHECK(parse_iso8601("2024-01-15T12:00:00Z") == 1705320000);
  CHECK(parse_iso8601("2024-01-15T12:00:00") == 1705320000);
  CHECK(parse_iso8601("2024-01-15T12:00:00+00:00") == 1705320000);
  CHECK(format_iso8601(1705320000) == "2024-01-15T12:00:00Z");
  CHECK(parse_iso8601(format_iso8601(951782400)) == 951782400);  // 2000-02-29
  CHECK_THROWS(parse_iso8601("2024-01-15 12:00"));
  CHECK_THROWS(parse_iso8601("2024-01-15T12:00:00+02:00"));
  CHECK_THROWS(parse_iso8601("2024-13-01T00:00:00Z"));
}

TEST_CASE("two-row file") {
  const auto t = parse_trace_text(
      "timestamp,value\n2024-01-01T00:00:00Z,10\n2024-01-01T01:00:00Z,20\n",
      TraceKind::TemperatureCelsius);
  REQUIRE(t.samples().size() == 2);
  CHECK(t.samples()[0].value == Approx(283.15));
  CHECK(t.at(t.start() + 1800) == Approx(288.15));
}

TEST_CASE("interpolation and coverage") {
  const Trace t({{0, 0.0}, {100, 10.0}, {200, 0.0}});
  CHECK(t.at(0) == 0.0);
  CHECK(t.at(50) == Approx(5.0));
  CHECK(t.at(150) == Approx(5.0));
  CHECK(t.at(200) == 0.0);
  CHECK(t.covers(0, 200));
  CHECK_FALSE(t.covers(0, 201));
  CHECK_THROWS_AS(t.at(201), TraceError);
  CHECK_THROWS_WITH_AS(t.at(-1), doctest::Contains("1969-12-31T23:59:59Z"), TraceError);
}

TEST_CASE("malformed files name the line") {
  CHECK_THROWS_WITH_AS(
      parse_trace_text("timestamp,value\n2024-01-01T01:00:00Z,1\n2024-01-01T00:00:00Z,2\n",
                       TraceKind::PowerWatts, "x.csv"),
      doctest::Contains("x.csv:3"), TraceError);
  CHECK_THROWS_WITH_AS(parse_trace_text("time,v\n", TraceKind::PowerWatts, "y.csv"),
                       doctest::Contains("y.csv:1"), TraceError);
  CHECK_THROWS_WITH_AS(
      parse_trace_text("timestamp,value\n2024-01-01T00:00:00Z,abc\n", TraceKind::PowerWatts, "z"),
      doctest::Contains("z:2"), TraceError);
  CHECK_THROWS_AS(
      parse_trace_text("timestamp,value\n2024-01-01T00:00:00Z,1\n2024-01-01T00:00:00Z,1\n",
                       TraceKind::PowerWatts),
      TraceError);
  CHECK_THROWS_AS(parse_trace_text("timestamp,value\n", TraceKind::PowerWatts), TraceError);
}

TEST_CASE("format round trip") {
  const Trace t({{1705320000, 273.15 + 1.0 / 3.0}, {1705323600, 300.0}});
  const auto text = format_trace(t, TraceKind::TemperatureCelsius);
  CHECK(parse_trace_text(text, TraceKind::TemperatureCelsius) == t);
}

TEST_CASE("winter fixture converts from fahrenheit") {
  const auto s = load_season(test::data("traces/winter_temperature_f.csv"),
                             test::data("traces/module_winter_solar_w.csv"), "winter", "F");
  double lo = 1e9, hi = -1e9;
  for (const auto& x : s.temperature.samples()) {
    lo = std::min(lo, x.value);
    hi = std::max(hi, x.value);
  }
  CHECK(units::kelvin_to_celsius(lo) == Approx(-15.0).epsilon(0.01));
  CHECK(units::kelvin_to_celsius(hi) == Approx(-8.889).epsilon(0.01));
}
