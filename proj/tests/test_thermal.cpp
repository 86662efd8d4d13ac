#include <doctest.h>

#include <cmath>

#include "thermosim/thermal.hpp"

using namespace thermosim;
using doctest::Approx;

TEST_CASE("surface area") {
  CHECK(surface_area(EnclosureSpec::from_u(1.0, 1.0)) == Approx(6.0));
  CHECK(surface_area(EnclosureSpec::from_u(2.4384, 1.0)) == Approx(35.67).epsilon(0.01 / 35.67));
  CHECK(surface_area(EnclosureSpec::from_u(0.5, 1.0)) == Approx(1.5));
}

TEST_CASE("series heat transfer coefficient") {
  auto u_of = [](double hi, double d, double k, double ho) {
    return combined_heat_transfer_coefficient(EnclosureSpec::from_wall(1.0, {hi, d, k, ho}));
  };
  // Only the conduction term survives.
  CHECK(u_of(1e9, 0.04, 0.04, 1e9) == Approx(1.0).epsilon(1e-6));
  CHECK(u_of(10, 0.03175, 0.04, 25) == Approx(1.0 / (0.1 + 0.79375 + 0.04)));
  CHECK(u_of(10, 0.03175, 0.04, 25) == Approx(1.0710).epsilon(1e-4));
  CHECK(u_of(1e9, 0.03175, 0.04, 1e9) == Approx(1.2598).epsilon(1e-4));
  CHECK(u_of(1e9, 0.015875, 0.04, 1e9) == Approx(2.5197).epsilon(1e-4));
  CHECK(combined_heat_transfer_coefficient(EnclosureSpec::from_u(2.0, 0.35)) == 0.35);
  CHECK_THROWS(EnclosureSpec::from_wall(1.0, {10, 0.0, 0.04, 25}));
  CHECK_THROWS(EnclosureSpec::from_u(-1.0, 1.0));
}

TEST_CASE("air density") {
  CHECK(air_density({101325.0, 298.15}) == Approx(1.1839).epsilon(0.0005 / 1.1839));
  CHECK(air_density({101325.0, 293.15}) == Approx(1.204).epsilon(0.001 / 1.204));
  const auto air = enclosure_air(EnclosureSpec::from_u(2.0, 1.0));
  CHECK(air.mass == Approx(1.1839 * 8.0).epsilon(5e-4));
  CHECK(air.specific_heat == kAirSpecificHeat);
}

TEST_CASE("aggregate contents") {
  const auto agg = enclosure_aggregate({1.1839, 717.0}, {3.0, 1000.0}, {0.5, 700.0});
  CHECK(agg.mass == Approx(4.6839));
  CHECK(agg.specific_heat == Approx((1.1839 * 717 + 3000 + 350) / 4.6839));
  CHECK(agg.specific_heat == Approx(896.5).epsilon(0.1 / 896.5));
  CHECK(agg.heat_capacity == Approx(agg.mass * agg.specific_heat));
  const auto single = enclosure_aggregate({0.0, 717.0}, {2.0, 1000.0}, {0.0, 700.0});
  CHECK(single.specific_heat == Approx(1000.0));
}

TEST_CASE("heat transfer rate") {
  CHECK(heat_transfer_rate(1.0710, 6.0, 300.0, 300.0) == 0.0);
  CHECK(heat_transfer_rate(1.0710, 6.0, 283.15, 273.15) == Approx(64.26).epsilon(0.01 / 64.26));
  CHECK(heat_transfer_rate(1.0, 6.0, 273.15, 283.15) < 0.0);
}

TEST_CASE("euler step") {
  const EnclosureThermalState s{273.15, 4.6839, 4198.9};
  const double next = step_enclosure_temperature(s, 64.26, 0.0, 0.0, 60.0);
  CHECK(next - 273.15 == Approx(64.26 * 60.0 / 4198.9));
  CHECK(next - 273.15 == Approx(0.918).epsilon(0.001 / 0.918));
  CHECK(step_enclosure_temperature(s, 0.0, 7.0, 7.0, 60.0) == 273.15);
  CHECK_THROWS(step_enclosure_temperature(s, 0.0, 0.0, 0.0, 0.0));
  CHECK_THROWS(step_enclosure_temperature(s, 0.0, -1.0, 0.0, 60.0));
}

TEST_CASE("stability guard") {
  const double limit = max_stable_step(4198.9, 1.0, 6.0);
  CHECK(limit == Approx(0.1 * 4198.9 / 6.0));
  CHECK_NOTHROW(check_step(4198.9, 1.0, 6.0, limit));
  CHECK_THROWS_AS(check_step(4198.9, 1.0, 6.0, limit * 1.01), UnstableStepError);
}

TEST_CASE("equilibrium") {
  CHECK(equilibrium_temperature(1.0, 6.0, 290.0, 0.0, 0.0) == 290.0);
  CHECK(equilibrium_temperature(0.5, 2.0, 280.0, 10.0, 0.0) == Approx(290.0));
  CHECK(equilibrium_temperature(0.5, 2.0, 280.0, 10.0, 10.0) == Approx(280.0));
}

TEST_CASE("required airflow") {
  CHECK(required_airflow(120.0, 1.20, 1000.0, 10.0) == Approx(0.01));
  CHECK(required_airflow(0.0) == 0.0);
  CHECK_THROWS_AS(required_airflow(10.0, 1.2, 1000.0, 0.0), FanCapacityError);
}

TEST_CASE("fan cubic law") {
  const FanSpec fan = make_fan(2.0, 0.01, 0.05);
  CHECK(fan_power(fan, 0.02) == 8.0 * fan_power(fan, 0.01));
  CHECK(fan_power(fan, 0.01) == 2.0);
  CHECK(fan_power(fan, 0.02) == Approx(16.0));
  CHECK(fan_power(fan, 0.0) == 0.0);
  CHECK_THROWS_AS(fan_power(fan, 0.051), FanCapacityError);
  CHECK_THROWS(make_fan(1.0, 0.02, 0.01));
}

TEST_CASE("stepped decay follows the exponential") {
  const double ua = 1.0 * 6.0, mc = 4000.0, dt = 0.1 * mc / ua;
  for (double t0 : {250.0, 330.0}) {
    const double t_amb = 290.0;
    EnclosureThermalState s{t0, 5.0, mc};
    for (int i = 0; i < 200; ++i) {
      s.temperature = step_enclosure_temperature(
          s, heat_transfer_rate(1.0, 6.0, t_amb, s.temperature), 0.0, 0.0, dt);
    }
    const double exact = t_amb + (t0 - t_amb) * std::exp(-ua * 200.0 * dt / mc);
    // Explicit Euler decays as (1 - 0.1)^n against exp(-0.1 n).
    const double euler = t_amb + (t0 - t_amb) * std::pow(0.9, 200);
    CHECK(s.temperature == Approx(euler).epsilon(1e-9));
    CHECK(std::abs(s.temperature - exact) < 0.01 * std::abs(t0 - t_amb));
  }
}
