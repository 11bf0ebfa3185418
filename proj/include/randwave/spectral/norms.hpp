#pragma once

#include <limits>

#include "randwave/spectral/field.hpp"

namespace randwave {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// (sum |f(x)|^p dx^2)^(1/p), or max |f| for p = infinity. Spectral input is
/// inverted without discarding the imaginary part, so complex-valued block
/// projections are measured correctly. Throws std::invalid_argument for p < 1.
double lp_norm(const Field& field, double p);

/// Homogeneous Sobolev norm (sum |xi|^(2s) |f^(xi)|^2)^(1/2) scaled to match
/// the L^2 norm at s = 0. The xi = 0 mode is dropped for s > 0.
double sobolev_norm(const Field& field, double s);

}  // namespace randwave
