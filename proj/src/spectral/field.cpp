#include "randwave/spectral/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace randwave {

Field Field::physical(const Grid& grid, std::vector<double> samples) {
  if (samples.size() != grid.size()) {
    throw std::invalid_argument("physical sample count does not match grid");
  }
  Field f(grid, Representation::kPhysical);
  f.samples_ = std::move(samples);
  return f;
}

Field Field::spectral(const Grid& grid, std::vector<Complex> amplitudes) {
  if (amplitudes.size() != grid.size()) {
    throw std::invalid_argument("spectral amplitude count does not match grid");
  }
  Field f(grid, Representation::kSpectral);
  f.amplitudes_ = std::move(amplitudes);
  return f;
}

Field Field::zeros(const Grid& grid, Representation rep) {
  return rep == Representation::kPhysical
             ? physical(grid, std::vector<double>(grid.size(), 0.0))
             : spectral(grid, std::vector<Complex>(grid.size()));
}

std::span<const double> Field::samples() const {
  if (!is_physical()) throw std::logic_error("field is not in physical representation");
  return samples_;
}

std::span<const Complex> Field::amplitudes() const {
  if (!is_spectral()) throw std::logic_error("field is not in spectral representation");
  return amplitudes_;
}

namespace {

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays is. Plans are built once per (size, sign) and never destroyed.
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<Complex> scratch(static_cast<std::size_t>(n) * n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan =
        fftw_plan_dft_2d(n, n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("FFTW planning failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

void run_fft(int n, std::span<Complex> data, int sign) {
  if (data.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("FFT buffer size does not match grid");
  }
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan_cache().get(n, sign), buf, buf);
  const double scale = 1.0 / n;  // 1/sqrt(n*n)
  for (auto& v : data) v *= scale;
}

}  // namespace

void fft_forward(int n, std::span<Complex> data) { run_fft(n, data, FFTW_FORWARD); }
void fft_inverse(int n, std::span<Complex> data) { run_fft(n, data, FFTW_BACKWARD); }

Field transform(const Field& field, Direction direction) {
  const Grid& grid = field.grid();
  if (direction == Direction::kForward) {
    if (!field.is_physical()) {
      throw std::invalid_argument("forward transform needs a physical field");
    }
    auto s = field.samples();
    std::vector<Complex> data(s.begin(), s.end());
    fft_forward(grid.n(), data);
    return Field::spectral(grid, std::move(data));
  }
  if (!field.is_spectral()) {
    throw std::invalid_argument("inverse transform needs a spectral field");
  }
  auto a = field.amplitudes();
  std::vector<Complex> data(a.begin(), a.end());
  fft_inverse(grid.n(), data);
  std::vector<double> out(data.size());
  std::transform(data.begin(), data.end(), out.begin(),
                 [](const Complex& c) { return c.real(); });
  return Field::physical(grid, std::move(out));
}

Field to_spectral(const Field& field) {
  return field.is_spectral() ? field : transform(field, Direction::kForward);
}

Field to_physical(const Field& field) {
  return field.is_physical() ? field : transform(field, Direction::kInverse);
}

double conjugate_symmetry_defect(const Field& spectral_field) {
  const Grid& g = spectral_field.grid();
  auto a = spectral_field.amplitudes();
  double worst = 0.0;
  for (int i1 = 0; i1 < g.n(); ++i1) {
    if (g.is_nyquist(i1)) continue;
    for (int i2 = 0; i2 < g.n(); ++i2) {
      if (g.is_nyquist(i2)) continue;
      const int j1 = g.index_of(-g.wavenumber(i1));
      const int j2 = g.index_of(-g.wavenumber(i2));
      worst = std::max(worst, std::abs(a[g.flat(j1, j2)] - std::conj(a[g.flat(i1, i2)])));
    }
  }
  return worst;
}

}  // namespace randwave
