#pragma once

#include <string>
#include <vector>

#include "randwave/spectral/field.hpp"

namespace randwave {

/// First-order derivative appearing in the nonlinearity (d u)^2.
enum class Deriv { kTime, kX1, kX2 };

Deriv parse_deriv(const std::string& text);
std::string to_string(Deriv d);

/// Fourier multiplier symbols used by the wave machinery.
struct MultiplierKind {
  enum class Tag {
    kCosHalfwave,       // cos(t|xi|)
    kSincHalfwave,      // sin(t|xi|)/|xi|, limit t at xi = 0
    kHalfwaveVelocity,  // -|xi| sin(t|xi|), time derivative of cos(t|xi|)
    kSpatialDerivative, // i xi_axis
    kGradientMagnitude, // |xi|
    kM01,               // d sin(tau|xi|)/|xi| for d in {d_t, d_x1, d_x2}
  };

  Tag tag = Tag::kGradientMagnitude;
  double time = 0.0;
  int axis = 1;
  Deriv deriv = Deriv::kX1;

  static MultiplierKind cos_halfwave(double t) { return {Tag::kCosHalfwave, t}; }
  static MultiplierKind sinc_halfwave(double t) { return {Tag::kSincHalfwave, t}; }
  static MultiplierKind halfwave_velocity(double t) { return {Tag::kHalfwaveVelocity, t}; }
  static MultiplierKind spatial_derivative(int axis) {
    return {Tag::kSpatialDerivative, 0.0, axis};
  }
  static MultiplierKind gradient_magnitude() { return {Tag::kGradientMagnitude}; }
  static MultiplierKind m01(double tau, Deriv d) { return {Tag::kM01, tau, 1, d}; }
};

/// sin(t r)/r with the analytic limit t at r = 0.
double sinc_halfwave(double t, double r);

/// Symbol value at lattice point (i1, i2). Odd symbols (i xi_axis) vanish on
/// the Nyquist line of their axis so that real fields stay real.
Complex symbol(const MultiplierKind& kind, const Grid& grid, int i1, int i2);

/// Symbol over the whole lattice in storage order.
std::vector<Complex> symbol_table(const MultiplierKind& kind, const Grid& grid);

/// Multiplies spectral amplitudes by the symbol; physical input is transformed
/// first. The result is spectral.
Field apply_multiplier(const Field& field, const MultiplierKind& kind);

/// The spatial-derivative multiplier for d in {d_x1, d_x2}.
MultiplierKind spatial_derivative_of(Deriv d);

}  // namespace randwave
