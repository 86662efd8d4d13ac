#include "thermosim/csv_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "thermosim/csv_util.hpp"

namespace thermosim {

namespace {

using csv::format_double;

[[noreturn]] void bad(std::string_view origin, std::size_t line, const std::string& msg) {
  throw FormatError(std::string(origin) + ":" + std::to_string(line) + ": " + msg);
}

void expect_header(const std::vector<csv::Line>& lines, std::string_view header,
                   std::string_view origin) {
  if (lines.empty()) bad(origin, 1, "empty file");
  if (csv::trim(lines[0].text) != header) {
    bad(origin, lines[0].number, "expected header '" + std::string(header) + "'");
  }
}

bool parse_flag(std::string_view s) {
  if (s == "1") return true;
  if (s == "0") return false;
  throw std::invalid_argument("expected 0 or 1, got '" + std::string(s) + "'");
}

const char* flag(bool b) { return b ? "1" : "0"; }

}  // namespace

std::string format_trajectory(const std::vector<StepRecord>& traj) {
  std::string out(kTrajectoryHeader);
  out += '\n';
  for (const auto& r : traj) {
    out += format_iso8601(r.time);
    for (double v : {r.ambient_temperature, r.enclosure_temperature, r.u_requested, r.u_actual,
                     r.processor_power, r.fan_power, r.fan_airflow, r.solar_power, r.energy_charged,
                     r.energy_discharged, r.stored_energy}) {
      out += ',';
      out += format_double(v);
    }
    out += ',';
    out += flag(r.available);
    out += ',' + format_double(r.work_done);
    out += ',';
    out += flag(r.powered);
    out += ',' + format_double(r.energy_drained);
    out += ',' + format_double(r.solar_used);
    out += '\n';
  }
  return out;
}

std::vector<StepRecord> parse_trajectory(std::string_view text, std::string_view origin) {
  const auto lines = csv::split_lines(text);
  expect_header(lines, kTrajectoryHeader, origin);
  std::vector<StepRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = csv::split_fields(lines[i].text);
    if (f.size() != 17) bad(origin, lines[i].number, "expected 17 fields");
    try {
      auto d = [&](std::size_t k) { return csv::parse_double(csv::trim(f[k])); };
      StepRecord r{parse_iso8601(csv::trim(f[0])), d(1), d(2), d(3), d(4), d(5), d(6), d(7), d(8),
                   d(9), d(10), d(11), parse_flag(csv::trim(f[12])), d(13),
                   parse_flag(csv::trim(f[14])), d(15), d(16)};
      out.push_back(r);
    } catch (const std::exception& e) {
      bad(origin, lines[i].number, e.what());
    }
  }
  return out;
}

std::string format_metrics(const MetricsReport& m) {
  nlohmann::ordered_json j;
  j["energy_efficiency"] = m.energy_efficiency ? nlohmann::ordered_json(*m.energy_efficiency)
                                                : nlohmann::ordered_json(nullptr);
  j["availability"] = m.availability;
  j["work_rate"] = m.work_rate;
  j["total_work"] = m.total_work;
  j["total_fan_energy"] = m.total_fan_energy;
  j["total_compute_energy"] = m.total_compute_energy;
  j["degenerate"] = m.degenerate;
  return j.dump(2) + "\n";
}

MetricsReport parse_metrics(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    MetricsReport m;
    if (!j.at("energy_efficiency").is_null()) m.energy_efficiency = j.at("energy_efficiency").get<double>();
    m.availability = j.at("availability").get<double>();
    m.work_rate = j.at("work_rate").get<double>();
    m.total_work = j.at("total_work").get<double>();
    m.total_fan_energy = j.at("total_fan_energy").get<double>();
    m.total_compute_energy = j.at("total_compute_energy").get<double>();
    m.degenerate = j.at("degenerate").get<bool>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("metrics: ") + e.what());
  }
}

std::string format_plan(const SchedulePlan& plan) {
  std::string out(kPlanHeader);
  out += '\n';
  for (std::size_t i = 0; i < plan.utilization.size(); ++i) {
    out += format_iso8601(plan.start + plan.slot_seconds * static_cast<std::int64_t>(i));
    out += ',' + format_double(plan.utilization[i]) + '\n';
  }
  return out;
}

SchedulePlan parse_plan(std::string_view text, std::string_view origin) {
  const auto lines = csv::split_lines(text);
  expect_header(lines, kPlanHeader, origin);
  if (lines.size() < 2) bad(origin, lines[0].number, "plan has no slots");
  SchedulePlan plan;
  std::vector<EpochSeconds> starts;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = csv::split_fields(lines[i].text);
    if (f.size() != 2) bad(origin, lines[i].number, "expected 2 fields");
    try {
      starts.push_back(parse_iso8601(csv::trim(f[0])));
      const double u = csv::parse_double(csv::trim(f[1]));
      OperatingPoint{u};
      plan.utilization.push_back(u);
    } catch (const std::exception& e) {
      bad(origin, lines[i].number, e.what());
    }
    if (starts.size() == 2) {
      plan.slot_seconds = starts[1] - starts[0];
      if (plan.slot_seconds <= 0) bad(origin, lines[i].number, "slot starts must increase");
    } else if (starts.size() > 2 &&
               starts.back() - starts[starts.size() - 2] != plan.slot_seconds) {
      bad(origin, lines[i].number, "slots must be evenly spaced");
    }
  }
  plan.start = starts.front();
  return plan;
}

SchedulePlan parse_plan_file(const std::filesystem::path& file) {
  return parse_plan(read_file(file), file.string());
}

std::vector<SweepRow> sweep_rows(const DesignSpace& space, const Selection& sel) {
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < sel.results.size(); ++i) {
    const DesignResult& r = sel.results[i];
    for (const auto& s : r.seasons) {
      rows.push_back({space.insulations[r.config.insulation].label,
                      space.coolings[r.config.cooling].label, r.config.utilization, s.season,
                      s.metrics.energy_efficiency, s.metrics.availability, s.metrics.work_rate,
                      s.metrics.total_work, s.metrics.total_fan_energy,
                      s.metrics.total_compute_energy, r.feasible, r.rank,
                      sel.selected && *sel.selected == i});
    }
  }
  return rows;
}

std::string format_sweep(const std::vector<SweepRow>& rows) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.insulation + ',' + r.cooling + ',' + format_double(r.utilization) + ',' + r.season + ',';
    out += r.energy_efficiency ? format_double(*r.energy_efficiency) : std::string("NA");
    for (double v : {r.availability, r.work_rate, r.total_work, r.fan_energy, r.compute_energy}) {
      out += ',' + format_double(v);
    }
    out += ',';
    out += flag(r.feasible);
    out += ',' + std::to_string(r.rank) + ',';
    out += flag(r.selected);
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> parse_sweep(std::string_view text, std::string_view origin) {
  const auto lines = csv::split_lines(text);
  expect_header(lines, kSweepHeader, origin);
  std::vector<SweepRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = csv::split_fields(lines[i].text);
    if (f.size() != 13) bad(origin, lines[i].number, "expected 13 fields");
    try {
      auto d = [&](std::size_t k) { return csv::parse_double(csv::trim(f[k])); };
      SweepRow r;
      r.insulation = std::string(csv::trim(f[0]));
      r.cooling = std::string(csv::trim(f[1]));
      r.utilization = d(2);
      r.season = std::string(csv::trim(f[3]));
      if (csv::trim(f[4]) != "NA") r.energy_efficiency = d(4);
      r.availability = d(5);
      r.work_rate = d(6);
      r.total_work = d(7);
      r.fan_energy = d(8);
      r.compute_energy = d(9);
      r.feasible = parse_flag(csv::trim(f[10]));
      r.rank = static_cast<int>(d(11));
      r.selected = parse_flag(csv::trim(f[12]));
      rows.push_back(std::move(r));
    } catch (const std::exception& e) {
      bad(origin, lines[i].number, e.what());
    }
  }
  return rows;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error(file.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& file, std::string_view content) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(file.string() + ": cannot write file");
  out << content;
  if (!out) throw std::runtime_error(file.string() + ": write failed");
}

}  // namespace thermosim
