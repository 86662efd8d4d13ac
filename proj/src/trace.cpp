#include "thermosim/trace.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>

#include "thermosim/csv_util.hpp"
#include "thermosim/units.hpp"

namespace thermosim {

namespace {

int parse_fixed_int(std::string_view text, std::size_t pos, std::size_t len) {
  if (pos + len > text.size()) throw std::invalid_argument("truncated timestamp");
  int v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in timestamp");
    v = v * 10 + (c - '0');
  }
  return v;
}

void expect_char(std::string_view text, std::size_t pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw std::invalid_argument(std::string("expected '") + c + "' in timestamp");
  }
}

}  // namespace

EpochSeconds parse_iso8601(std::string_view text) {
  using namespace std::chrono;
  try {
    const int y = parse_fixed_int(text, 0, 4);
    expect_char(text, 4, '-');
    const int mo = parse_fixed_int(text, 5, 2);
    expect_char(text, 7, '-');
    const int d = parse_fixed_int(text, 8, 2);
    if (text.size() <= 10 || (text[10] != 'T' && text[10] != ' ')) {
      throw std::invalid_argument("expected 'T' in timestamp");
    }
    const int h = parse_fixed_int(text, 11, 2);
    expect_char(text, 13, ':');
    const int mi = parse_fixed_int(text, 14, 2);
    expect_char(text, 16, ':');
    const int s = parse_fixed_int(text, 17, 2);
    const std::string_view tail = text.substr(19);
    if (!(tail.empty() || tail == "Z" || tail == "+00:00")) {
      throw std::invalid_argument("only UTC timestamps are supported");
    }
    const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                             day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h > 23 || mi > 59 || s > 59) {
      throw std::invalid_argument("timestamp field out of range");
    }
    const auto tp = sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
    return tp.time_since_epoch().count();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("invalid timestamp '" + std::string(text) + "': " + e.what());
  }
}

std::string format_iso8601(EpochSeconds t) {
  using namespace std::chrono;
  const sys_seconds tp{seconds{t}};
  const auto day_point = floor<days>(tp);
  const year_month_day ymd{day_point};
  const hh_mm_ss hms{tp - day_point};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ldZ", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()),
                static_cast<long>(hms.hours().count()), static_cast<long>(hms.minutes().count()),
                static_cast<long>(hms.seconds().count()));
  return buf;
}

Trace::Trace(std::vector<Sample> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw TraceError("trace is empty");
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    if (samples_[i].time == samples_[i - 1].time) {
      throw TraceError("duplicate timestamp " + format_iso8601(samples_[i].time));
    }
    if (samples_[i].time < samples_[i - 1].time) {
      throw TraceError("timestamps out of order at " + format_iso8601(samples_[i].time));
    }
  }
}

double Trace::at(EpochSeconds t) const {
  if (samples_.empty() || t < samples_.front().time || t > samples_.back().time) {
    throw TraceError("trace gap: no data covering " + format_iso8601(t));
  }
  auto hi = std::lower_bound(samples_.begin(), samples_.end(), t,
                             [](const Sample& s, EpochSeconds v) { return s.time < v; });
  if (hi->time == t) return hi->value;
  auto lo = hi - 1;
  const double w = double(t - lo->time) / double(hi->time - lo->time);
  return lo->value + w * (hi->value - lo->value);
}

bool Trace::covers(EpochSeconds from, EpochSeconds to) const {
  return !samples_.empty() && samples_.front().time <= from && to <= samples_.back().time;
}

Trace Trace::constant(EpochSeconds from, EpochSeconds to, double value) {
  if (to <= from) return Trace({{from, value}});
  return Trace({{from, value}, {to, value}});
}

Trace parse_trace_text(std::string_view text, TraceKind kind, std::string_view origin) {
  const auto rows = csv::split_lines(text);
  const std::string where(origin);
  if (rows.empty()) throw TraceError(where + ": empty trace file");
  if (csv::trim(rows.front().text) != "timestamp,value") {
    throw TraceError(where + ":" + std::to_string(rows.front().number) +
                     ": expected header 'timestamp,value'");
  }
  std::vector<Trace::Sample> samples;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string line_ref = where + ":" + std::to_string(row.number);
    const auto fields = csv::split_fields(row.text);
    if (fields.size() != 2) throw TraceError(line_ref + ": expected 2 fields");
    EpochSeconds t;
    double v;
    try {
      t = parse_iso8601(csv::trim(fields[0]));
      v = csv::parse_double(csv::trim(fields[1]));
    } catch (const std::invalid_argument& e) {
      throw TraceError(line_ref + ": " + e.what());
    }
    if (!samples.empty()) {
      if (t == samples.back().time) throw TraceError(line_ref + ": duplicate timestamp");
      if (t < samples.back().time) throw TraceError(line_ref + ": timestamp out of order");
    }
    if (kind == TraceKind::TemperatureCelsius) v = units::celsius_to_kelvin(v);
    samples.push_back({t, v});
  }
  if (samples.empty()) throw TraceError(where + ": trace has no samples");
  return Trace(std::move(samples));
}

Trace parse_trace(const std::filesystem::path& path, TraceKind kind) {
  std::ifstream in(path);
  if (!in) throw TraceError("cannot open trace file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_trace_text(ss.str(), kind, path.string());
}

std::string format_trace(const Trace& trace, TraceKind kind) {
  std::string out = "timestamp,value\n";
  for (const auto& s : trace.samples()) {
    const double v =
        kind == TraceKind::TemperatureCelsius ? units::kelvin_to_celsius(s.value) : s.value;
    out += format_iso8601(s.time);
    out += ',';
    out += csv::format_double(v);
    out += '\n';
  }
  return out;
}

}  // namespace thermosim
