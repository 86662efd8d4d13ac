#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "thermosim/case_studies.hpp"

using namespace thermosim;
using doctest::Approx;
using units::celsius_to_kelvin;

namespace {

Season flat_season(const Scenario& base, double amb_c, double solar) {
  return {"flat", Trace::constant(base.start, base.end(), celsius_to_kelvin(amb_c)),
          Trace::constant(base.start, base.end(), solar)};
}

}  // namespace

TEST_CASE("exit stage selection") {
  const auto spec = default_multi_exit(ProcessorSpec{1.0, 10.0});
  REQUIRE(spec.stage_costs.size() == 7);
  CHECK(exit_stage_selection(spec.stage_costs.back() * 2.0, spec) == 7);
  CHECK(exit_stage_selection(spec.stage_costs.front() * 0.99, spec) == 0);
  for (int k = 1; k <= 7; ++k) CHECK(exit_stage_selection(spec.stage_costs[k - 1], spec) == k);
  CHECK(spec.stage_costs.back() == Approx(10.0 * 3600.0));
}

TEST_CASE("stage specs") {
  const ProcessorSpec p{1.0, 10.0};
  const auto spec = default_multi_exit(p);
  CHECK(std::is_sorted(spec.stage_costs.begin(), spec.stage_costs.end()));
  const auto u = stage_utilizations(spec, p);
  REQUIRE(u.size() == 8);
  CHECK(u[0] == 0.0);
  for (std::size_t k = 1; k < u.size(); ++k) {
    CHECK(power_at(p, OperatingPoint{u[k]}) * 3600.0 == Approx(spec.stage_costs[k - 1]));
  }
  MultiExitSpec bad = spec;
  std::swap(bad.stage_costs[0], bad.stage_costs[1]);
  CHECK_THROWS(bad.validate());
  bad = spec;
  bad.stage_work.pop_back();
  CHECK_THROWS(bad.validate());
  CHECK_THROWS(default_multi_exit(ProcessorSpec{0.0, 10.0}));
}

TEST_CASE("unlimited energy saturates both budgets") {
  auto base = test::nano(25.0, 0.0, 6.0);
  base.fan.reset();
  base.enclosure = EnclosureSpec::from_u(0.1315, 5.0);
  const auto season = flat_season(base, 20.0, 1000.0);
  const auto spec = default_multi_exit(base.processor);
  PlanOptions opt;
  opt.max_rounds = 2;
  for (auto b : {Budgeting::ThermalAgnostic, Budgeting::ThermalAware}) {
    const auto hist = exit_stage_distribution(base, season, spec, b, opt);
    CHECK(hist.rounds() == 6);
    CHECK(hist.counts[7] == 6);
    CHECK(hist.mean_stage() == Approx(7.0));
  }
}

TEST_CASE("no energy means every round is skipped") {
  auto base = test::nano(20.0, 0.0, 6.0);
  base.initial_energy = base.battery.reserve();
  const auto season = flat_season(base, 20.0, 0.0);
  const auto spec = default_multi_exit(base.processor);
  PlanOptions opt;
  opt.max_rounds = 2;
  for (auto b : {Budgeting::ThermalAgnostic, Budgeting::ThermalAware}) {
    const auto hist = exit_stage_distribution(base, season, spec, b, opt);
    CHECK(hist.counts[0] == 6);
    CHECK(hist.mean_stage() == 0.0);
  }
}

TEST_CASE("season horizon samples slot starts") {
  const auto base = test::nano();
  const Season s{"ramp", Trace({{base.start, 270.0}, {base.start + 7200, 290.0}}),
                 Trace::constant(base.start, base.start + 7200, 3.0)};
  const std::vector<double> demand{0.1, 0.2};
  const auto h = season_horizon(s, base.start, 7200, demand);
  REQUIRE(h.slots.size() == 2);
  CHECK(h.slots[1].ambient_temperature == Approx(280.0));
  CHECK(h.slots[1].demand == 0.2);
  CHECK_THROWS(season_horizon(s, base.start, 7200, std::vector<double>{0.1}));
  CHECK_THROWS_AS(season_horizon(s, base.start, 4 * 3600), TraceError);
}

TEST_CASE("data rate comparison bookkeeping") {
  auto base = test::nano(20.0, 0.0, 6.0);
  const DataAcquisitionSpec router;
  const auto load = router.load();
  CHECK(load.base_power == Approx(3.0));
  CHECK(load.max_power == Approx(20.0));
  const std::vector<Season> seasons{flat_season(base, 15.0, 0.0), flat_season(base, 30.0, 4.0)};
  PlanOptions opt;
  opt.max_rounds = 2;
  const auto cmp = data_rate_comparison(base, seasons, router, opt);
  REQUIRE(cmp.seasons.size() == 2);
  double aware = 0, agnostic = 0;
  for (const auto& s : cmp.seasons) {
    CHECK(s.aware_rate > 0.0);
    CHECK(s.gain_percent == Approx(100.0 * (s.aware_rate - s.agnostic_rate) / s.agnostic_rate));
    aware += s.aware_rate;
    agnostic += s.agnostic_rate;
  }
  CHECK(cmp.annual_gain_percent == Approx(100.0 * (aware - agnostic) / agnostic));
}
