#include "randwave/spectral/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace randwave {

namespace {

template <typename Range>
double lp_of_moduli(const Range& values, double p, double cell_area) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
  }
  double acc = 0.0;
  if (p == 2.0) {
    for (const auto& v : values) acc += std::norm(v);
  } else if (p == 4.0) {
    for (const auto& v : values) {
      const double s = std::norm(v);
      acc += s * s;
    }
  } else {
    for (const auto& v : values) acc += std::pow(std::abs(v), p);
  }
  return std::pow(acc * cell_area, 1.0 / p);
}

}  // namespace

double lp_norm(const Field& field, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("L^p norm needs p >= 1");
  const double area = field.grid().cell_area();
  if (field.is_physical()) return lp_of_moduli(field.samples(), p, area);
  auto a = field.amplitudes();
  std::vector<Complex> data(a.begin(), a.end());
  fft_inverse(field.grid().n(), data);
  return lp_of_moduli(data, p, area);
}

double sobolev_norm(const Field& field, double s) {
  const Field spec = to_spectral(field);
  const Grid& g = spec.grid();
  auto a = spec.amplitudes();
  double acc = 0.0;
  for (int i1 = 0; i1 < g.n(); ++i1) {
    for (int i2 = 0; i2 < g.n(); ++i2) {
      const double r2 = g.frequency(i1) * g.frequency(i1) + g.frequency(i2) * g.frequency(i2);
      const double mag = std::norm(a[g.flat(i1, i2)]);
      if (s == 0.0) {
        acc += mag;
      } else if (r2 > 0.0) {
        acc += std::pow(r2, s) * mag;
      }
    }
  }
  return g.dx() * std::sqrt(acc);
}

}  // namespace randwave
