#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thermosim {

/// Seconds since the Unix epoch, UTC.
using EpochSeconds = std::int64_t;

/// Accepts "YYYY-MM-DDTHH:MM:SSZ" (the trailing Z or "+00:00" is optional).
EpochSeconds parse_iso8601(std::string_view text);
std::string format_iso8601(EpochSeconds t);

class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Time series with linear interpolation and hard failure outside coverage.
class Trace {
 public:
  struct Sample {
    EpochSeconds time;
    double value;
    bool operator==(const Sample&) const = default;
  };

  Trace() = default;
  explicit Trace(std::vector<Sample> samples);

  /// Throws TraceError naming the timestamp when t is not covered.
  double at(EpochSeconds t) const;
  bool covers(EpochSeconds from, EpochSeconds to) const;

  const std::vector<Sample>& samples() const { return samples_; }
  bool empty() const { return samples_.empty(); }
  EpochSeconds start() const { return samples_.front().time; }
  EpochSeconds end() const { return samples_.back().time; }

  /// Constant-valued trace covering [from, to].
  static Trace constant(EpochSeconds from, EpochSeconds to, double value);

  bool operator==(const Trace&) const = default;

 private:
  std::vector<Sample> samples_;
};

/// What a trace file holds; temperatures are Celsius on disk and kelvin in memory.
enum class TraceKind { TemperatureCelsius, PowerWatts };

/// Reads a `timestamp,value` CSV. Errors name the offending line.
Trace parse_trace(const std::filesystem::path& path, TraceKind kind);
Trace parse_trace_text(std::string_view text, TraceKind kind, std::string_view origin = "<trace>");

/// Inverse of parse_trace_text.
std::string format_trace(const Trace& trace, TraceKind kind);

}  // namespace thermosim
