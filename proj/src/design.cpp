#include "thermosim/design.hpp"

#include <algorithm>
#include <limits>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace thermosim {

EnclosureSpec InsulationOption::apply(double side_length) const {
  if (u) return EnclosureSpec::from_u(side_length, *u);
  if (wall) return EnclosureSpec::from_wall(side_length, *wall);
  throw std::invalid_argument("insulation '" + label + "' has neither U nor a wall");
}

Metric parse_metric(std::string_view name) {
  if (name == "energy_efficiency") return Metric::EnergyEfficiency;
  if (name == "availability") return Metric::Availability;
  if (name == "work_rate") return Metric::WorkRate;
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::EnergyEfficiency: return "energy_efficiency";
    case Metric::Availability: return "availability";
    case Metric::WorkRate: return "work_rate";
  }
  return "?";
}

double metric_value(const MetricsReport& r, Metric m) {
  switch (m) {
    case Metric::EnergyEfficiency: return r.energy_efficiency.value_or(100.0);
    case Metric::Availability: return r.availability;
    case Metric::WorkRate: return r.work_rate;
  }
  return 0.0;
}

std::vector<DesignConfig> enumerate(const DesignSpace& space) {
  if (space.insulations.empty()) throw std::invalid_argument("design space has no insulations");
  if (space.coolings.empty()) throw std::invalid_argument("design space has no cooling options");
  if (space.operating_points.empty()) {
    throw std::invalid_argument("design space has no operating points");
  }
  for (double u : space.operating_points) {
    if (!(u > 0.0 && u <= 1.0)) throw std::invalid_argument("operating points must be in (0, 1]");
  }
  std::vector<DesignConfig> out;
  out.reserve(space.insulations.size() * space.coolings.size() * space.operating_points.size());
  for (std::size_t i = 0; i < space.insulations.size(); ++i)
    for (std::size_t c = 0; c < space.coolings.size(); ++c)
      for (std::size_t p = 0; p < space.operating_points.size(); ++p)
        out.push_back({i, c, p, space.operating_points[p]});
  return out;
}

Scenario configure(const Scenario& base, const DesignSpace& space, const DesignConfig& config,
                   const Season& season) {
  Scenario sc = base;
  sc.name = base.name + "/" + season.name;
  sc.enclosure = space.insulations.at(config.insulation).apply(base.enclosure.side_length());
  sc.fan = space.coolings.at(config.cooling).fan;
  sc.temperature = season.temperature;
  sc.solar = season.solar;
  sc.start = season.temperature.start();
  sc.policy = ConstantUtilization{config.utilization};
  sc.availability_threshold = config.utilization;
  return sc;
}

DesignResult evaluate(const Scenario& base, const DesignSpace& space, const DesignConfig& config,
                      std::span<const Season> seasons) {
  DesignResult result;
  result.config = config;
  for (const auto& season : seasons) {
    result.seasons.push_back({season.name, run(configure(base, space, config, season)).metrics});
  }
  return result;
}

namespace {

bool binds(const Objective& obj, const std::string& season) {
  return obj.binding_seasons.empty() ||
         std::find(obj.binding_seasons.begin(), obj.binding_seasons.end(), season) !=
             obj.binding_seasons.end();
}

bool is_feasible(const DesignResult& r, const Objective& obj) {
  if (r.config.utilization < obj.min_operating_point) return false;
  for (const auto& s : r.seasons) {
    if (binds(obj, s.season) && metric_value(s.metrics, obj.primary) < obj.target - 1e-9) {
      return false;
    }
  }
  return true;
}

double mean_metric(const DesignResult& r, const Objective& obj, Metric m) {
  double sum = 0.0;
  int n = 0;
  for (const auto& s : r.seasons) {
    if (!binds(obj, s.season)) continue;
    sum += metric_value(s.metrics, m);
    ++n;
  }
  return n == 0 ? 0.0 : sum / n;
}

double worst_primary(const DesignResult& r, const Objective& obj) {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& s : r.seasons) {
    if (binds(obj, s.season)) worst = std::min(worst, metric_value(s.metrics, obj.primary));
  }
  return worst;
}

}  // namespace

Selection select(std::span<const DesignResult> results, const Objective& objective) {
  Selection sel;
  sel.results.assign(results.begin(), results.end());
  for (auto& r : sel.results) r.feasible = is_feasible(r, objective);

  std::vector<std::size_t> order(sel.results.size());
  std::iota(order.begin(), order.end(), 0);
  auto better = [&](std::size_t a, std::size_t b) {
    const auto& ra = sel.results[a];
    const auto& rb = sel.results[b];
    if (ra.feasible != rb.feasible) return ra.feasible;
    if (ra.feasible) {
      for (Metric m : objective.secondary) {
        const double va = mean_metric(ra, objective, m);
        const double vb = mean_metric(rb, objective, m);
        if (va != vb) return va > vb;
      }
    } else {
      const double va = worst_primary(ra, objective);
      const double vb = worst_primary(rb, objective);
      if (va != vb) return va > vb;
    }
    return ra.config < rb.config;
  };
  std::sort(order.begin(), order.end(), better);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    sel.results[order[pos]].rank = static_cast<int>(pos) + 1;
  }
  if (!order.empty() && sel.results[order.front()].feasible) sel.selected = order.front();
  return sel;
}

Selection sweep(const Scenario& base, const DesignSpace& space, std::span<const Season> seasons,
                const Objective& objective, unsigned threads) {
  const auto configs = enumerate(space);
  std::vector<DesignResult> results(configs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(configs.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      if (failed) return;
      try {
        results[i] = evaluate(base, space, configs[i], seasons);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return select(results, objective);
}

}  // namespace thermosim
