#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "randwave/spectral/grid.hpp"

namespace randwave {

using Complex = std::complex<double>;

enum class Representation { kPhysical, kSpectral };

/// One real scalar field on a Grid, held either as physical samples
/// (row-major) or as unitary-normalized spectral amplitudes in FFT order.
/// Immutable once constructed.
class Field {
 public:
  static Field physical(const Grid& grid, std::vector<double> samples);
  static Field spectral(const Grid& grid, std::vector<Complex> amplitudes);
  static Field zeros(const Grid& grid, Representation rep);

  const Grid& grid() const { return grid_; }
  Representation representation() const { return rep_; }
  bool is_physical() const { return rep_ == Representation::kPhysical; }
  bool is_spectral() const { return rep_ == Representation::kSpectral; }

  /// Throws std::logic_error if the field is not physical.
  std::span<const double> samples() const;
  /// Throws std::logic_error if the field is not spectral.
  std::span<const Complex> amplitudes() const;

 private:
  Field(const Grid& grid, Representation rep) : grid_(grid), rep_(rep) {}

  Grid grid_;
  Representation rep_;
  std::vector<double> samples_;
  std::vector<Complex> amplitudes_;
};

enum class Direction { kForward, kInverse };

/// Unitary 2D DFT. Forward expects a physical field, inverse a spectral one;
/// a mismatch throws std::invalid_argument. The inverse keeps the real part.
Field transform(const Field& field, Direction direction);

Field to_spectral(const Field& field);
Field to_physical(const Field& field);

/// In-place unitary transforms on raw n x n buffers.
void fft_forward(int n, std::span<Complex> data);
void fft_inverse(int n, std::span<Complex> data);

/// Largest |a(-xi) - conj(a(xi))| over the lattice, skipping Nyquist lines.
double conjugate_symmetry_defect(const Field& spectral_field);

}  // namespace randwave
