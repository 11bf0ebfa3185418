#pragma once

#include <cstddef>

namespace randwave {

/// Periodic square [0, L)^2 sampled on n x n points. Frequency index i along an
/// axis maps to the integer wavenumber m(i) in [-n/2, n/2 - 1] (FFT order),
/// i.e. frequency xi = m * 2*pi/L.
class Grid {
 public:
  /// Throws std::invalid_argument unless n is a power of two >= 8, L > 0 and
  /// the frequency spacing 2*pi/L is at most 1.
  Grid(int n_points, double box_length);

  int n() const { return n_; }
  double box_length() const { return length_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

  double dx() const { return length_ / n_; }
  double cell_area() const { return dx() * dx(); }
  double frequency_spacing() const;

  /// Integer wavenumber for a storage index along one axis.
  int wavenumber(int index) const { return index < n_ / 2 ? index : index - n_; }
  double frequency(int index) const { return wavenumber(index) * frequency_spacing(); }
  /// True on the unpaired -n/2 line, where odd symbols are zeroed.
  bool is_nyquist(int index) const { return index == n_ / 2; }

  /// Row-major flat index (axis 1 is the slow index).
  std::size_t flat(int i1, int i2) const {
    return static_cast<std::size_t>(i1) * n_ + static_cast<std::size_t>(i2);
  }
  /// Storage index of wavenumber m (any integer, reduced modulo n).
  int index_of(int m) const { return ((m % n_) + n_) % n_; }

  bool operator==(const Grid& other) const {
    return n_ == other.n_ && length_ == other.length_;
  }

 private:
  int n_;
  double length_;
};

Grid make_grid(int n_points, double box_length);

}  // namespace randwave
