#include "randwave/spectral/multiplier.hpp"

#include <cmath>
#include <stdexcept>

namespace randwave {

Deriv parse_deriv(const std::string& text) {
  if (text == "t" || text == "dt") return Deriv::kTime;
  if (text == "x1" || text == "dx1") return Deriv::kX1;
  if (text == "x2" || text == "dx2") return Deriv::kX2;
  throw std::invalid_argument("unknown derivative '" + text + "' (expected t, x1 or x2)");
}

std::string to_string(Deriv d) {
  switch (d) {
    case Deriv::kTime: return "t";
    case Deriv::kX1: return "x1";
    case Deriv::kX2: return "x2";
  }
  return "?";
}

double sinc_halfwave(double t, double r) {
  if (r == 0.0) return t;
  return std::sin(t * r) / r;
}

MultiplierKind spatial_derivative_of(Deriv d) {
  if (d == Deriv::kTime) throw std::invalid_argument("d_t is not a spatial derivative");
  return MultiplierKind::spatial_derivative(d == Deriv::kX1 ? 1 : 2);
}

Complex symbol(const MultiplierKind& kind, const Grid& grid, int i1, int i2) {
  using Tag = MultiplierKind::Tag;
  const double xi1 = grid.frequency(i1);
  const double xi2 = grid.frequency(i2);
  const double r = std::hypot(xi1, xi2);
  auto odd = [&](int axis) -> Complex {
    const bool nyquist = axis == 1 ? grid.is_nyquist(i1) : grid.is_nyquist(i2);
    if (nyquist) return 0.0;
    return {0.0, axis == 1 ? xi1 : xi2};
  };
  switch (kind.tag) {
    case Tag::kCosHalfwave: return std::cos(kind.time * r);
    case Tag::kSincHalfwave: return sinc_halfwave(kind.time, r);
    case Tag::kHalfwaveVelocity: return -r * std::sin(kind.time * r);
    case Tag::kSpatialDerivative: return odd(kind.axis);
    case Tag::kGradientMagnitude: return r;
    case Tag::kM01:
      if (kind.deriv == Deriv::kTime) return std::cos(kind.time * r);
      if (r == 0.0) return 0.0;
      return odd(kind.deriv == Deriv::kX1 ? 1 : 2) * (std::sin(kind.time * r) / r);
  }
  throw std::logic_error("unhandled multiplier tag");
}

std::vector<Complex> symbol_table(const MultiplierKind& kind, const Grid& grid) {
  std::vector<Complex> table(grid.size());
  for (int i1 = 0; i1 < grid.n(); ++i1)
    for (int i2 = 0; i2 < grid.n(); ++i2) table[grid.flat(i1, i2)] = symbol(kind, grid, i1, i2);
  return table;
}

Field apply_multiplier(const Field& field, const MultiplierKind& kind) {
  const Field spec = to_spectral(field);
  const Grid& grid = spec.grid();
  auto a = spec.amplitudes();
  std::vector<Complex> out(a.begin(), a.end());
  for (int i1 = 0; i1 < grid.n(); ++i1)
    for (int i2 = 0; i2 < grid.n(); ++i2) out[grid.flat(i1, i2)] *= symbol(kind, grid, i1, i2);
  return Field::spectral(grid, std::move(out));
}

}  // namespace randwave
