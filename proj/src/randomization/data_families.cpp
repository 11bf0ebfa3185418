#include "randwave/randomization/data_families.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "randwave/core/rng.hpp"
#include "randwave/spectral/field_io.hpp"
#include "randwave/spectral/norms.hpp"

namespace randwave {

DataSpec::Family parse_family(const std::string& name) {
  if (name == "gaussian") return DataSpec::Family::kGaussian;
  if (name == "bandlimited") return DataSpec::Family::kBandlimited;
  if (name == "modes") return DataSpec::Family::kModes;
  if (name == "file") return DataSpec::Family::kFile;
  throw std::invalid_argument("unknown data family '" + name + "'");
}

std::string to_string(DataSpec::Family family) {
  switch (family) {
    case DataSpec::Family::kGaussian: return "gaussian";
    case DataSpec::Family::kBandlimited: return "bandlimited";
    case DataSpec::Family::kModes: return "modes";
    case DataSpec::Family::kFile: return "file";
  }
  return "?";
}

std::vector<LatticeMode> parse_modes(const std::string& text) {
  std::vector<LatticeMode> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    LatticeMode mode;
    char c1 = 0;
    char c2 = 0;
    std::stringstream one(item);
    if (!(one >> mode.amplitude >> c1 >> mode.m1 >> c2 >> mode.m2) || c1 != ':' || c2 != ':') {
      throw std::invalid_argument("bad mode '" + item + "' (expected amplitude:m1:m2)");
    }
    out.push_back(mode);
  }
  return out;
}

namespace {

double periodic_offset(double x, double x0, double length) {
  double d = std::fmod(x - x0, length);
  if (d > 0.5 * length) d -= length;
  if (d < -0.5 * length) d += length;
  return d;
}

std::pair<double, double> center_or_default(const Grid& grid, const DataSpec& spec) {
  return spec.center.value_or(std::make_pair(0.5 * grid.box_length(), 0.5 * grid.box_length()));
}

}  // namespace

Field gaussian_bump(const Grid& grid, double amplitude, double sigma,
                    std::pair<double, double> center) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian width must be positive");
  std::vector<double> v(grid.size());
  for (int i1 = 0; i1 < grid.n(); ++i1) {
    const double d1 = periodic_offset(i1 * grid.dx(), center.first, grid.box_length());
    for (int i2 = 0; i2 < grid.n(); ++i2) {
      const double d2 = periodic_offset(i2 * grid.dx(), center.second, grid.box_length());
      v[grid.flat(i1, i2)] = amplitude * std::exp(-(d1 * d1 + d2 * d2) / (2.0 * sigma * sigma));
    }
  }
  return Field::physical(grid, std::move(v));
}

Field lattice_modes(const Grid& grid, const std::vector<LatticeMode>& modes) {
  // cos(xi.x) has unitary amplitude n/2 at +xi and -xi (n at xi = 0).
  std::vector<Complex> a(grid.size());
  const double half = 0.5 * grid.n();
  for (const auto& mode : modes) {
    if (std::abs(mode.m1) >= grid.n() / 2 || std::abs(mode.m2) >= grid.n() / 2) {
      throw std::invalid_argument("lattice mode beyond the resolvable band");
    }
    a[grid.flat(grid.index_of(mode.m1), grid.index_of(mode.m2))] += half * mode.amplitude;
    a[grid.flat(grid.index_of(-mode.m1), grid.index_of(-mode.m2))] += half * mode.amplitude;
  }
  return Field::spectral(grid, std::move(a));
}

Field bandlimited_random(const Grid& grid, double max_frequency, double sigma, double h1_norm,
                         std::uint64_t seed, std::pair<double, double> center) {
  std::mt19937_64 rng(derive_seed(seed, seed_domain::kCoefficients, 0));
  std::normal_distribution<double> normal;
  std::vector<Complex> carrier(grid.size());
  for (int i1 = 0; i1 < grid.n(); ++i1) {
    for (int i2 = 0; i2 < grid.n(); ++i2) {
      const double r = std::hypot(grid.frequency(i1), grid.frequency(i2));
      if (r > max_frequency || grid.is_nyquist(i1) || grid.is_nyquist(i2)) continue;
      const double taper = std::pow(1.0 - (r * r) / (max_frequency * max_frequency), 2);
      carrier[grid.flat(i1, i2)] = taper * Complex(normal(rng), normal(rng));
    }
  }
  // Hermitian symmetrization keeps the carrier real.
  std::vector<Complex> sym(grid.size());
  for (int i1 = 0; i1 < grid.n(); ++i1) {
    for (int i2 = 0; i2 < grid.n(); ++i2) {
      const std::size_t j = grid.flat(grid.index_of(-grid.wavenumber(i1)),
                                      grid.index_of(-grid.wavenumber(i2)));
      sym[grid.flat(i1, i2)] = 0.5 * (carrier[grid.flat(i1, i2)] + std::conj(carrier[j]));
    }
  }
  const Field real_carrier = to_physical(Field::spectral(grid, std::move(sym)));
  const Field envelope = gaussian_bump(grid, 1.0, sigma, center);
  std::vector<double> v(grid.size());
  auto c = real_carrier.samples();
  auto e = envelope.samples();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c[i] * e[i];
  const Field raw = Field::physical(grid, v);
  const double norm = sobolev_norm(raw, 1.0);
  if (norm == 0.0) throw std::runtime_error("bandlimited draw produced a zero field");
  for (auto& x : v) x *= h1_norm / norm;
  return Field::physical(grid, std::move(v));
}

Field make_phi0(const Grid& grid, const DataSpec& spec) {
  switch (spec.family) {
    case DataSpec::Family::kGaussian:
      return gaussian_bump(grid, spec.amplitude, spec.sigma, center_or_default(grid, spec));
    case DataSpec::Family::kBandlimited:
      return bandlimited_random(grid, spec.max_frequency, spec.sigma, spec.h1_norm, spec.seed,
                                center_or_default(grid, spec));
    case DataSpec::Family::kModes:
      return lattice_modes(grid, spec.modes);
    case DataSpec::Family::kFile: {
      NamedField nf = read_field(spec.path);
      if (!(nf.field.grid() == grid)) {
        throw std::invalid_argument("field file " + spec.path + " does not match the grid");
      }
      return nf.field;
    }
  }
  throw std::logic_error("unhandled data family");
}

std::optional<double> support_radius(const DataSpec& spec) {
  switch (spec.family) {
    case DataSpec::Family::kGaussian:
    case DataSpec::Family::kBandlimited:
      return 5.0 * spec.sigma;
    case DataSpec::Family::kModes:
    case DataSpec::Family::kFile:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace randwave
