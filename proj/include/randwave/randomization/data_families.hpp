#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randwave/spectral/field.hpp"

namespace randwave {

/// One real Fourier mode amplitude * cos(2*pi/L * (m1 x1 + m2 x2)).
struct LatticeMode {
  double amplitude = 1.0;
  int m1 = 0;
  int m2 = 0;
};

/// Built-in families for the deterministic datum phi0.
struct DataSpec {
  enum class Family { kGaussian, kBandlimited, kModes, kFile };
  Family family = Family::kGaussian;

  double amplitude = 0.5;  // gaussian peak value
  double sigma = 2.0;      // gaussian width; envelope width for bandlimited
  std::optional<std::pair<double, double>> center;  // default: box center

  double max_frequency = 2.0;  // bandlimited: |xi| cutoff of the random carrier
  double h1_norm = 1.0;        // bandlimited: prescribed homogeneous H^1 norm
  std::uint64_t seed = 1;      // bandlimited: coefficient seed

  std::vector<LatticeMode> modes;
  std::string path;  // field dump for kFile
};

DataSpec::Family parse_family(const std::string& name);
std::string to_string(DataSpec::Family family);

/// "a:m1:m2, a:m1:m2, ..." -> modes.
std::vector<LatticeMode> parse_modes(const std::string& text);

/// Gaussian bump A exp(-|x - x0|^2 / (2 sigma^2)), periodized distance.
Field gaussian_bump(const Grid& grid, double amplitude, double sigma,
                    std::pair<double, double> center);

/// Sum of cosine lattice modes, built exactly in spectral space.
Field lattice_modes(const Grid& grid, const std::vector<LatticeMode>& modes);

/// Gaussian envelope times a random real carrier with spectrum in |xi| <= R,
/// rescaled to the prescribed H^1 norm.
Field bandlimited_random(const Grid& grid, double max_frequency, double sigma, double h1_norm,
                         std::uint64_t seed, std::pair<double, double> center);

/// Materializes phi0 on the grid. File input must match the grid.
Field make_phi0(const Grid& grid, const DataSpec& spec);

/// Radius outside of which the datum is negligible (5 sigma), or nullopt for
/// periodic data without a localized support.
std::optional<double> support_radius(const DataSpec& spec);

}  // namespace randwave
