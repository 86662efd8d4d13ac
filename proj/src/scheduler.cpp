#include "thermosim/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace thermosim {

Trace ForecastHorizon::temperature_trace() const {
  std::vector<Trace::Sample> s;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    s.push_back({start + slot_seconds * static_cast<std::int64_t>(i), slots[i].ambient_temperature});
  }
  s.push_back({end(), slots.back().ambient_temperature});
  return Trace(std::move(s));
}

Trace ForecastHorizon::solar_trace() const {
  std::vector<Trace::Sample> s;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    s.push_back({start + slot_seconds * static_cast<std::int64_t>(i), slots[i].solar_power});
  }
  s.push_back({end(), slots.back().solar_power});
  return Trace(std::move(s));
}

double ForecastHorizon::demand_utilization_seconds() const {
  double total = 0.0;
  for (const auto& s : slots) total += s.demand;
  return total * static_cast<double>(slot_seconds);
}

void ForecastHorizon::validate(std::int64_t step_seconds) const {
  if (slots.empty()) throw std::invalid_argument("forecast horizon has no slots");
  if (slot_seconds <= 0 || step_seconds <= 0 || slot_seconds % step_seconds != 0) {
    throw std::invalid_argument("slot duration must be a positive multiple of the step");
  }
  for (const auto& s : slots) {
    if (!(s.demand >= 0.0 && s.demand <= 1.0)) {
      throw std::invalid_argument("slot demand must be a utilization in [0, 1]");
    }
    if (s.solar_power < 0.0) throw std::invalid_argument("solar forecast must be >= 0");
  }
}

Scenario forecast_scenario(const ForecastHorizon& horizon, const Scenario& base, Policy policy) {
  Scenario sc = base;
  sc.temperature = horizon.temperature_trace();
  sc.solar = horizon.solar_trace();
  sc.start = horizon.start;
  sc.duration_seconds = horizon.end() - horizon.start;
  sc.policy = std::move(policy);
  return sc;
}

namespace {

struct Score {
  double work = 0.0;
  double drain = 0.0;
};

// More work wins; at equal work, less stored energy drained wins.
bool better(const Score& a, const Score& b) {
  const double tol = 1e-9 * std::max({1.0, std::abs(a.work), std::abs(b.work)});
  if (a.work > b.work + tol) return true;
  if (a.work < b.work - tol) return false;
  return a.drain < b.drain * (1.0 - 1e-9) - 1e-9;
}

Score score(const ForecastHorizon& h, const Scenario& base, const SchedulePlan& p) {
  const auto result = run(forecast_scenario(h, base, PlannedSchedule{p}));
  Score s;
  for (const auto& r : result.trajectory) {
    s.work += r.work_done;
    s.drain += r.energy_drained;
  }
  return s;
}

// Keeps repeated quantum moves from accumulating binary round-off.
double snap(double u) { return std::round(u * 1e9) / 1e9; }

SchedulePlan make_plan(const ForecastHorizon& h, std::vector<double> u) {
  return SchedulePlan{h.start, h.slot_seconds, std::move(u)};
}

// Start-of-slot states under a plan.
std::vector<SimState> slot_states(const ForecastHorizon& h, const Scenario& base,
                                  const SchedulePlan& p) {
  const Scenario sc = forecast_scenario(h, base, PlannedSchedule{p});
  validate(sc);
  const std::size_t per_slot = static_cast<std::size_t>(h.slot_seconds / sc.step_seconds);
  std::vector<SimState> states;
  SimState s = initial_state(sc);
  for (std::size_t i = 0; i < h.slots.size(); ++i) {
    states.push_back(s);
    s = run_from(sc, s, per_slot).final_state;
  }
  return states;
}

}  // namespace

double marginal_efficiency(const ForecastHorizon& h, const Scenario& base, const SimState& state,
                           std::size_t slot, double u) {
  if (!(u > 0.0 && u <= 1.0)) throw std::invalid_argument("utilization must be in (0, 1]");
  if (slot >= h.slots.size()) throw std::out_of_range("slot outside the horizon");
  Scenario sc = forecast_scenario(h, base, ConstantUtilization{u});
  validate(sc);
  SimState s = state;
  s.time = h.start + h.slot_seconds * static_cast<std::int64_t>(slot);
  const auto result = run_from(sc, s, static_cast<std::size_t>(h.slot_seconds / sc.step_seconds));
  double work = 0.0, drain = 0.0;
  for (const auto& r : result.trajectory) {
    work += r.work_done;
    drain += r.energy_drained;
  }
  if (drain <= 0.0) return std::numeric_limits<double>::infinity();
  return work / drain;
}

SchedulePlan naive_plan(const ForecastHorizon& h) {
  const double u = h.demand_utilization_seconds() /
                   (static_cast<double>(h.slot_seconds) * static_cast<double>(h.slots.size()));
  return make_plan(h, std::vector<double>(h.slots.size(), std::clamp(u, 0.0, 1.0)));
}

PlanOutcome plan(const ForecastHorizon& h, const Scenario& base, const PlanOptions& opt) {
  h.validate(base.step_seconds);
  if (!(opt.quantum > 0.0) || opt.max_rounds < 0 ||
      !(opt.min_utilization >= 0.0 && opt.min_utilization <= opt.max_utilization &&
        opt.max_utilization <= 1.0)) {
    throw std::invalid_argument("invalid planner options");
  }
  const std::size_t n = h.slots.size();
  const double lo = opt.min_utilization, hi = opt.max_utilization;
  const double eps = 1e-12;

  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = std::clamp(h.slots[i].demand, lo, hi);
  SchedulePlan current = make_plan(h, u);
  Score current_score = score(h, base, current);

  PlanOutcome out;
  for (int round = 0; round < opt.max_rounds; ++round) {
    bool changed = false;
    for (std::size_t k = n; k-- > 0;) {
      // Local efficiency of each slot at its current level ranks candidate
      // partners; the full simulation decides.
      const auto states = slot_states(h, base, current);
      std::vector<double> eff(n, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const double uj = current.utilization[j];
        eff[j] = uj > 0.0 ? marginal_efficiency(h, base, states[j], j, uj) : 0.0;
      }

      struct Candidate {
        std::size_t partner;
        double delta;  // added to slot k, removed from partner
        double contrast;
      };
      std::vector<Candidate> candidates;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const double uk = current.utilization[k], uj = current.utilization[j];
        const double up = std::min({opt.quantum, hi - uk, uj - lo});
        if (up > eps) candidates.push_back({j, up, eff[k] - eff[j]});
        const double down = std::min({opt.quantum, uk - lo, hi - uj});
        if (down > eps) candidates.push_back({j, -down, eff[j] - eff[k]});
      }
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const Candidate& a, const Candidate& b) {
                         return a.contrast > b.contrast;
                       });

      std::optional<SchedulePlan> best_plan;
      Score best_score = current_score;
      for (const auto& c : candidates) {
        SchedulePlan trial = current;
        trial.utilization[k] = snap(std::clamp(trial.utilization[k] + c.delta, lo, hi));
        trial.utilization[c.partner] =
            snap(std::clamp(trial.utilization[c.partner] - c.delta, lo, hi));
        const Score s = score(h, base, trial);
        if (better(s, best_score)) {
          best_score = s;
          best_plan = std::move(trial);
        }
      }
      if (best_plan) {
        current = std::move(*best_plan);
        current_score = best_score;
        changed = true;
      }
    }
    out.rounds = round + 1;
    if (!changed) break;
  }

  const SchedulePlan naive = naive_plan(h);
  const Score naive_score = score(h, base, naive);
  // Never report less work than the naive schedule, even inside the tie tolerance.
  if (!better(current_score, naive_score) || current_score.work < naive_score.work) {
    current = naive;
    current_score = naive_score;
    out.fell_back = true;
  }
  out.plan = std::move(current);
  out.planned_work = current_score.work;
  out.planned_drain = current_score.drain;
  out.demand_work = h.demand_utilization_seconds() * base.processor.unit_count;
  out.feasible = out.planned_work >= out.demand_work * (1.0 - 1e-6);
  return out;
}

NaiveComparison compare_against_naive(const ForecastHorizon& h, const Scenario& base,
                                      const PlanOptions& opt) {
  NaiveComparison cmp;
  cmp.planned = plan(h, base, opt);
  cmp.planned_work = cmp.planned.planned_work;
  cmp.naive_work = score(h, base, naive_plan(h)).work;
  cmp.gain_percent =
      cmp.naive_work > 0.0 ? 100.0 * (cmp.planned_work - cmp.naive_work) / cmp.naive_work : 0.0;
  return cmp;
}

}  // namespace thermosim
