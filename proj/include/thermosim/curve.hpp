#pragma once

#include <span>
#include <utility>
#include <vector>

namespace thermosim {

/// Piecewise-linear curve through ordered breakpoints, held constant past
/// either end. x must be strictly increasing, y within [0, 1.5].
class EmpiricalCurve {
 public:
  struct Point {
    double x;
    double y;
    bool operator==(const Point&) const = default;
  };

  EmpiricalCurve() = default;
  explicit EmpiricalCurve(std::vector<Point> points);

  double operator()(double x) const;

  std::span<const Point> points() const { return points_; }
  bool empty() const { return points_.empty(); }

  bool operator==(const EmpiricalCurve&) const = default;

 private:
  std::vector<Point> points_;
};

}  // namespace thermosim
