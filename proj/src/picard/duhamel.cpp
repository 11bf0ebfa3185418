#include "randwave/picard/duhamel.hpp"

#include <cmath>
#include <stdexcept>

namespace randwave {

WaveOperators::WaveOperators(const Grid& grid, const TimeGrid& time_grid)
    : grid_(grid), time_grid_(time_grid) {
  const std::size_t size = grid.size();
  radius_.resize(size);
  dx1_.resize(size);
  dx2_.resize(size);
  dealias_.resize(size);
  const int cut = grid.n() / 3;
  for (int i1 = 0; i1 < grid.n(); ++i1) {
    for (int i2 = 0; i2 < grid.n(); ++i2) {
      const std::size_t idx = grid.flat(i1, i2);
      radius_[idx] = std::hypot(grid.frequency(i1), grid.frequency(i2));
      dx1_[idx] = grid.is_nyquist(i1) ? 0.0 : grid.frequency(i1);
      dx2_[idx] = grid.is_nyquist(i2) ? 0.0 : grid.frequency(i2);
      const bool keep = std::abs(grid.wavenumber(i1)) <= cut && std::abs(grid.wavenumber(i2)) <= cut;
      dealias_[idx] = keep ? 1.0 : 0.0;
    }
  }
  cos_.resize(static_cast<std::size_t>(time_grid.nodes()));
  sinc_.resize(static_cast<std::size_t>(time_grid.nodes()));
  for (int d = 0; d < time_grid.nodes(); ++d) {
    const double t = time_grid.time(d);
    auto& c = cos_[static_cast<std::size_t>(d)];
    auto& s = sinc_[static_cast<std::size_t>(d)];
    c.resize(size);
    s.resize(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
      c[idx] = std::cos(t * radius_[idx]);
      s[idx] = sinc_halfwave(t, radius_[idx]);
    }
  }
}

DuhamelKernel m01_kernel(Deriv d) {
  switch (d) {
    case Deriv::kTime: return DuhamelKernel::kCos;
    case Deriv::kX1: return DuhamelKernel::kDx1;
    case Deriv::kX2: return DuhamelKernel::kDx2;
  }
  throw std::logic_error("unhandled derivative");
}

FieldSeries duhamel(const WaveOperators& ops, const FieldSeries& source, DuhamelKernel kernel,
                    std::string tag) {
  const TimeGrid& tg = ops.time_grid();
  if (tg.nodes() < 2) throw std::invalid_argument("Duhamel integral needs at least 2 time nodes");
  if (!(source.time_grid() == tg) || !(source.grid() == ops.grid())) {
    throw std::invalid_argument("source series does not match the operator grids");
  }
  const std::size_t size = ops.grid().size();
  const bool use_cos = kernel == DuhamelKernel::kCos;
  std::span<const double> factor;
  if (kernel == DuhamelKernel::kDx1) factor = ops.derivative_factor(1);
  if (kernel == DuhamelKernel::kDx2) factor = ops.derivative_factor(2);
  const bool times_i = !factor.empty();

  std::vector<Field> spectral_source;
  spectral_source.reserve(static_cast<std::size_t>(tg.nodes()));
  for (const auto& f : source.fields()) spectral_source.push_back(to_spectral(f));

  // Lag tables with the derivative factor folded in, built once per call.
  std::vector<std::vector<double>> lag(static_cast<std::size_t>(tg.nodes()));
  for (int d = 0; d < tg.nodes(); ++d) {
    auto base = use_cos ? ops.cos_lag(d) : ops.sinc_lag(d);
    auto& row = lag[static_cast<std::size_t>(d)];
    row.assign(base.begin(), base.end());
    if (times_i)
      for (std::size_t i = 0; i < size; ++i) row[i] *= factor[i];
  }

  std::vector<Field> out;
  out.reserve(static_cast<std::size_t>(tg.nodes()));
  out.push_back(Field::zeros(ops.grid(), Representation::kSpectral));
  std::vector<double> acc(2 * size);
  for (int m = 1; m < tg.nodes(); ++m) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int mp = 0; mp <= m; ++mp) {
      const double w = (mp == 0 || mp == m) ? 0.5 : 1.0;
      const double* k = lag[static_cast<std::size_t>(m - mp)].data();
      const double* s = reinterpret_cast<const double*>(
          spectral_source[static_cast<std::size_t>(mp)].amplitudes().data());
      double* a = acc.data();
      for (std::size_t i = 0; i < size; ++i) {
        const double wk = w * k[i];
        a[2 * i] += wk * s[2 * i];
        a[2 * i + 1] += wk * s[2 * i + 1];
      }
    }
    std::vector<Complex> v(size);
    const double dt = tg.dt();
    for (std::size_t i = 0; i < size; ++i) {
      const Complex c(acc[2 * i] * dt, acc[2 * i + 1] * dt);
      v[i] = times_i ? Complex(-c.imag(), c.real()) : c;
    }
    out.push_back(Field::spectral(ops.grid(), std::move(v)));
  }
  return {tg, std::move(out), std::move(tag)};
}

FieldSeries duhamel(const FieldSeries& source, const TimeGrid& time_grid, Deriv d) {
  if (time_grid.nodes() < 2) throw std::invalid_argument("Duhamel integral needs at least 2 time nodes");
  const WaveOperators ops(source.grid(), time_grid);
  return duhamel(ops, source, m01_kernel(d), "duhamel");
}

namespace {

std::vector<Complex> dealiased_physical(const WaveOperators& ops, const Field& f) {
  const auto mask = ops.dealias_mask();
  const Field s = to_spectral(f);
  auto amp = s.amplitudes();
  std::vector<Complex> v(amp.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = amp[i] * mask[i];
  fft_inverse(ops.grid().n(), v);
  return v;
}

}  // namespace

Field dealiased_product(const WaveOperators& ops, const Field& a, const Field& b) {
  if (!(a.grid() == ops.grid()) || !(b.grid() == ops.grid())) {
    throw std::invalid_argument("product factors do not match the operator grid");
  }
  std::vector<Complex> pa = dealiased_physical(ops, a);
  const std::vector<Complex> pb = &a == &b ? pa : dealiased_physical(ops, b);
  for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = pa[i].real() * pb[i].real();
  fft_forward(ops.grid().n(), pa);
  const auto mask = ops.dealias_mask();
  for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= mask[i];
  return Field::spectral(ops.grid(), std::move(pa));
}

FieldSeries dealiased_product(const WaveOperators& ops, const FieldSeries& a,
                              const FieldSeries& b, std::string tag) {
  if (!(a.time_grid() == b.time_grid())) throw std::invalid_argument("product series time grids differ");
  std::vector<Field> out;
  out.reserve(a.fields().size());
  for (int m = 0; m < a.time_grid().nodes(); ++m) {
    out.push_back(dealiased_product(ops, a.at(m), b.at(m)));
  }
  return {a.time_grid(), std::move(out), std::move(tag)};
}

}  // namespace randwave
