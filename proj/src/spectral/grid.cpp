#include "randwave/spectral/grid.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace randwave {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(int n_points, double box_length) : n_(n_points), length_(box_length) {
  if (!is_power_of_two(n_points) || n_points < 8) {
    throw std::invalid_argument("grid size must be a power of two >= 8, got " +
                                std::to_string(n_points));
  }
  if (!(box_length > 0.0)) {
    throw std::invalid_argument("box length must be positive");
  }
  // Unit-scale blocks need at least one lattice mode per unit of frequency.
  if (frequency_spacing() > 1.0 + 1e-12) {
    throw std::invalid_argument("frequency spacing 2*pi/L must not exceed 1");
  }
}

double Grid::frequency_spacing() const { return 2.0 * std::numbers::pi / length_; }

Grid make_grid(int n_points, double box_length) { return Grid(n_points, box_length); }

}  // namespace randwave
