#pragma once

#include <string>
#include <vector>

#include "randwave/spectral/field.hpp"

namespace randwave {

/// Uniform nodes t_m = m T / n_steps, m = 0..n_steps, on [0, T].
class TimeGrid {
 public:
  /// Throws std::invalid_argument unless T > 0 and n_steps >= 1.
  TimeGrid(double T, int n_steps);

  double length() const { return length_; }
  int steps() const { return steps_; }
  int nodes() const { return steps_ + 1; }
  double dt() const { return length_ / steps_; }
  double time(int m) const { return m == steps_ ? length_ : m * dt(); }

  bool operator==(const TimeGrid&) const = default;

 private:
  double length_;
  int steps_;
};

/// One field per time node, all on one grid, tagged with the quantity name.
class FieldSeries {
 public:
  /// Throws std::invalid_argument on a node-count or grid mismatch.
  FieldSeries(TimeGrid time_grid, std::vector<Field> fields, std::string tag);

  const TimeGrid& time_grid() const { return time_grid_; }
  const Grid& grid() const { return fields_.front().grid(); }
  const std::vector<Field>& fields() const { return fields_; }
  const Field& at(int m) const { return fields_.at(static_cast<std::size_t>(m)); }
  const std::string& tag() const { return tag_; }

 private:
  TimeGrid time_grid_;
  std::vector<Field> fields_;
  std::string tag_;
};

/// Pointwise a*x + b*y of two series on the same grids (spectral result).
FieldSeries combine(double a, const FieldSeries& x, double b, const FieldSeries& y,
                    std::string tag);

/// max_t ||x(t) - y(t)||_2 / max_t ||y(t)||_2.
double relative_sup_l2_discrepancy(const FieldSeries& x, const FieldSeries& y);

/// (int_0^T ||f(t)||_{L^r}^q dt)^(1/q) by the trapezoid rule, or the max over
/// nodes for q = infinity.
double space_time_norm(const FieldSeries& series, double q, double r);

}  // namespace randwave
