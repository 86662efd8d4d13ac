#include "thermosim/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace thermosim {

EmpiricalCurve::EmpiricalCurve(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("curve needs at least one breakpoint");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("curve breakpoint " + std::to_string(i) + " is not finite");
    }
    if (p.y < 0.0 || p.y > 1.5) {
      throw std::invalid_argument("curve value at breakpoint " + std::to_string(i) +
                                  " outside [0, 1.5]");
    }
    if (i > 0 && !(p.x > points_[i - 1].x)) {
      throw std::invalid_argument("curve x values must be strictly increasing (breakpoint " +
                                  std::to_string(i) + ")");
    }
  }
}

double EmpiricalCurve::operator()(double x) const {
  if (points_.empty()) throw std::logic_error("evaluating an empty curve");
  if (x <= points_.front().x) return points_.front().y;
  if (x >= points_.back().x) return points_.back().y;
  auto hi = std::upper_bound(points_.begin(), points_.end(), x,
                             [](double v, const Point& p) { return v < p.x; });
  auto lo = hi - 1;
  const double w = (x - lo->x) / (hi->x - lo->x);
  return lo->y + w * (hi->y - lo->y);
}

}  // namespace thermosim
