#include "randwave/picard/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "randwave/spectral/norms.hpp"

namespace randwave {

TimeGrid::TimeGrid(double T, int n_steps) : length_(T), steps_(n_steps) {
  if (!(T > 0.0)) throw std::invalid_argument("time interval length must be positive");
  if (n_steps < 1) throw std::invalid_argument("time grid needs at least one step");
}

FieldSeries::FieldSeries(TimeGrid time_grid, std::vector<Field> fields, std::string tag)
    : time_grid_(time_grid), fields_(std::move(fields)), tag_(std::move(tag)) {
  if (static_cast<int>(fields_.size()) != time_grid_.nodes()) {
    throw std::invalid_argument("series needs one field per time node");
  }
  for (const auto& f : fields_) {
    if (!(f.grid() == fields_.front().grid())) {
      throw std::invalid_argument("series fields must share one grid");
    }
  }
}

FieldSeries combine(double a, const FieldSeries& x, double b, const FieldSeries& y,
                    std::string tag) {
  if (!(x.time_grid() == y.time_grid()) || !(x.grid() == y.grid())) {
    throw std::invalid_argument("cannot combine series on different grids");
  }
  std::vector<Field> out;
  out.reserve(x.fields().size());
  for (int m = 0; m < x.time_grid().nodes(); ++m) {
    auto xa = to_spectral(x.at(m));
    auto ya = to_spectral(y.at(m));
    auto p = xa.amplitudes();
    auto q = ya.amplitudes();
    std::vector<Complex> v(p.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * p[i] + b * q[i];
    out.push_back(Field::spectral(x.grid(), std::move(v)));
  }
  return {x.time_grid(), std::move(out), std::move(tag)};
}

double relative_sup_l2_discrepancy(const FieldSeries& x, const FieldSeries& y) {
  const FieldSeries diff = combine(1.0, x, -1.0, y, "diff");
  double num = 0.0;
  double den = 0.0;
  for (int m = 0; m < x.time_grid().nodes(); ++m) {
    num = std::max(num, lp_norm(diff.at(m), 2.0));
    den = std::max(den, lp_norm(y.at(m), 2.0));
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : kInfinity;
  return num / den;
}

double space_time_norm(const FieldSeries& series, double q, double r) {
  if (!(q >= 1.0) || !(r >= 1.0)) throw std::invalid_argument("space-time norm needs q, r >= 1");
  const TimeGrid& tg = series.time_grid();
  if (std::isinf(q)) {
    double m = 0.0;
    for (const auto& f : series.fields()) m = std::max(m, lp_norm(f, r));
    return m;
  }
  double acc = 0.0;
  for (int m = 0; m < tg.nodes(); ++m) {
    const double w = (m == 0 || m == tg.steps()) ? 0.5 : 1.0;
    acc += w * std::pow(lp_norm(series.at(m), r), q);
  }
  return std::pow(acc * tg.dt(), 1.0 / q);
}

}  // namespace randwave
