#pragma once

#include <memory>
#include <span>
#include <vector>

#include "randwave/picard/series.hpp"
#include "randwave/spectral/multiplier.hpp"

namespace randwave {

/// Lattice tables shared by free evolution and Duhamel integrals on one
/// (Grid, TimeGrid) pair. Lag tables are indexed by d = 0..n_steps and hold
/// the symbol at time d * dt. Immutable and safe to share between threads.
class WaveOperators {
 public:
  WaveOperators(const Grid& grid, const TimeGrid& time_grid);

  const Grid& grid() const { return grid_; }
  const TimeGrid& time_grid() const { return time_grid_; }

  std::span<const double> radius() const { return radius_; }
  /// xi_axis with the Nyquist line zeroed; the symbol of d_axis is i times this.
  std::span<const double> derivative_factor(int axis) const {
    return axis == 1 ? dx1_ : dx2_;
  }
  std::span<const double> cos_lag(int d) const { return cos_[static_cast<std::size_t>(d)]; }
  std::span<const double> sinc_lag(int d) const { return sinc_[static_cast<std::size_t>(d)]; }
  /// 1 on |m_i| <= n/3 for both axes, 0 elsewhere (2/3-rule dealiasing).
  std::span<const double> dealias_mask() const { return dealias_; }

 private:
  Grid grid_;
  TimeGrid time_grid_;
  std::vector<double> radius_;
  std::vector<double> dx1_;
  std::vector<double> dx2_;
  std::vector<std::vector<double>> cos_;
  std::vector<std::vector<double>> sinc_;
  std::vector<double> dealias_;
};

/// Time kernel of a Duhamel integral, as a real lag table optionally times i.
enum class DuhamelKernel {
  kSinc,  // sin((t-s)|xi|)/|xi|: the solution u itself
  kCos,   // cos((t-s)|xi|): d_t of the solution, also m01 with d_t
  kDx1,   // i xi_1 sin((t-s)|xi|)/|xi|: m01 with d_x1
  kDx2,
};

DuhamelKernel m01_kernel(Deriv d);

/// out(t_m) = int_0^{t_m} K(t_m - s) source(s) ds by the composite trapezoid
/// rule on the time grid. Source and output are spectral; out(0) = 0.
FieldSeries duhamel(const WaveOperators& ops, const FieldSeries& source, DuhamelKernel kernel,
                    std::string tag);

/// Convenience form with the m01 kernel of the chosen derivative. Throws
/// std::invalid_argument for fewer than 2 time nodes.
FieldSeries duhamel(const FieldSeries& source, const TimeGrid& time_grid, Deriv d);

/// Dealiased pointwise product D(phys(D a) * phys(D b)), spectral result.
Field dealiased_product(const WaveOperators& ops, const Field& a, const Field& b);

/// The same product at every time node.
FieldSeries dealiased_product(const WaveOperators& ops, const FieldSeries& a,
                              const FieldSeries& b, std::string tag);

}  // namespace randwave
