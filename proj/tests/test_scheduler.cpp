#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "thermosim/scheduler.hpp"

using namespace thermosim;
using doctest::Approx;
using units::celsius_to_kelvin;

namespace {

ForecastHorizon horizon(const Scenario& base, std::vector<double> temps_c, double demand,
                        double solar = 0.0) {
  ForecastHorizon h;
  h.start = base.start;
  for (double t : temps_c) h.slots.push_back({celsius_to_kelvin(t), solar, demand});
  return h;
}

}  // namespace

TEST_CASE("forecast traces") {
  const auto base = test::nano();
  const auto h = horizon(base, {10, 20, 30}, 0.5);
  const auto t = h.temperature_trace();
  CHECK(t.at(h.start) == Approx(celsius_to_kelvin(10)));
  CHECK(t.at(h.start + 1800) == Approx(celsius_to_kelvin(15)));
  CHECK(t.at(h.end()) == Approx(celsius_to_kelvin(30)));
  CHECK(h.demand_utilization_seconds() == Approx(1.5 * 3600));
  const auto sc = forecast_scenario(h, base, ConstantUtilization{0.1});
  CHECK(sc.duration_seconds == 3 * 3600);
  CHECK(run(sc).trajectory.size() == 180);
}

TEST_CASE("horizon validation") {
  const auto base = test::nano();
  auto h = horizon(base, {10, 20}, 0.5);
  h.slot_seconds = 90;
  CHECK_THROWS(plan(h, base));
  h = horizon(base, {10, 20}, 1.5);
  CHECK_THROWS(plan(h, base));
  h.slots.clear();
  CHECK_THROWS(plan(h, base));
}

TEST_CASE("one slot takes the demand directly") {
  const auto base = test::nano();
  const auto out = plan(horizon(base, {15}, 0.35), base);
  REQUIRE(out.plan.utilization.size() == 1);
  CHECK(out.plan.utilization[0] == Approx(0.35));
  CHECK(out.feasible);
}

TEST_CASE("marginal efficiency matches direct simulation") {
  auto base = test::nano();
  base.fan_setpoint = celsius_to_kelvin(25.0);
  const auto h = horizon(base, {35, 35, 10, 10}, 0.5);
  const double u = 0.8;
  auto direct = [&](double amb_c) {
    auto sc = test::nano(amb_c, 0.0, 1.0);
    sc.policy = ConstantUtilization{u};
    double work = 0, drain = 0;
    for (const auto& r : run(sc).trajectory) {
      work += r.work_done;
      drain += r.energy_drained;
    }
    return work / drain;
  };
  const double full = base.battery.nominal_capacity;
  const double hot = marginal_efficiency(h, base, {0, celsius_to_kelvin(35), full}, 0, u);
  const double cold = marginal_efficiency(h, base, {0, celsius_to_kelvin(10), full}, 2, u);
  CHECK(hot == Approx(direct(35.0)));
  CHECK(cold == Approx(direct(10.0)));
  CHECK(cold > hot);
  // Base power dominates as u goes to zero.
  const double tiny = marginal_efficiency(h, base, {0, celsius_to_kelvin(10), full}, 2, 1e-6);
  CHECK(tiny < 1e-5);
  CHECK_THROWS(marginal_efficiency(h, base, {0, 290.0, full}, 2, 0.0));
  CHECK_THROWS(marginal_efficiency(h, base, {0, 290.0, full}, 9, 0.5));
}

TEST_CASE("flat conditions leave the constant schedule") {
  const auto base = load_scenario(test::data("scenarios/nano_node.json"));
  const auto in = load_horizon(test::data("horizons/flat.json"));
  const auto cmp = compare_against_naive(in.horizon, base, in.options);
  for (double u : cmp.planned.plan.utilization) CHECK(u == Approx(0.5).epsilon(1e-6));
  CHECK(std::abs(cmp.gain_percent) < 0.5);
}

TEST_CASE("planned never loses to naive") {
  const auto base = test::nano(20.0, 0.0, 6.0);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> temp(-15.0, 35.0), demand(0.2, 0.8);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<double> temps;
    for (int i = 0; i < 6; ++i) temps.push_back(temp(rng));
    const auto h = horizon(base, temps, demand(rng));
    PlanOptions opt;
    opt.max_rounds = 3;
    const auto cmp = compare_against_naive(h, base, opt);
    CHECK(cmp.planned_work >= cmp.naive_work * (1.0 - 1e-9));
    CHECK(cmp.gain_percent >= -1e-9);
    if (cmp.planned.fell_back) CHECK(cmp.planned.plan == naive_plan(h));
  }
}

TEST_CASE("infeasible demand returns a best-effort plan") {
  auto base = test::nano(20.0);
  base.initial_energy = base.battery.reserve() + units::wh_to_joules(5.0);
  const auto h = horizon(base, {20, 20, 20, 20}, 1.0);
  const auto out = plan(h, base);
  CHECK_FALSE(out.feasible);
  CHECK(out.plan.utilization.size() == 4);
  CHECK(out.planned_work < out.demand_work);
}

TEST_CASE("plan respects bounds and is deterministic") {
  const auto base = test::nano(20.0);
  const auto h = horizon(base, {-10, -5, 5, 20, 30, 25}, 0.5);
  PlanOptions opt;
  opt.min_utilization = 0.2;
  opt.max_utilization = 0.8;
  opt.max_rounds = 4;
  const auto a = plan(h, base, opt), b = plan(h, base, opt);
  CHECK(a.plan == b.plan);
  for (double u : a.plan.utilization) {
    CHECK(u >= 0.2 - 1e-12);
    CHECK(u <= 0.8 + 1e-12);
  }
  // Reallocation keeps the requested total.
  CHECK(a.plan.requested_utilization_seconds() ==
        Approx(h.demand_utilization_seconds()).epsilon(1e-9));
  CHECK(a.rounds <= opt.max_rounds);
}

TEST_CASE("day and night fixture shifts work and gains") {
  const auto base = load_scenario(test::data("scenarios/nano_node.json"));
  const auto in = load_horizon(test::data("horizons/day_night.json"));
  const auto cmp = compare_against_naive(in.horizon, base, in.options);
  CHECK(cmp.gain_percent > 0.0);
  CHECK_FALSE(cmp.planned.fell_back);
  CHECK(cmp.planned_work == Approx(cmp.planned.planned_work));
}
