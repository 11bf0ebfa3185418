#include "randwave/picard/picard.hpp"

#include <algorithm>
#include <cmath>

#include "randwave/spectral/field_io.hpp"
#include "randwave/spectral/norms.hpp"

namespace randwave {
namespace {

// i * factor * a, elementwise.
Field times_i_factor(const Field& f, std::span<const double> factor) {
  const Field s = to_spectral(f);
  auto a = s.amplitudes();
  std::vector<Complex> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Complex(-a[i].imag(), a[i].real()) * factor[i];
  return Field::spectral(s.grid(), std::move(v));
}

FieldSeries derivative_series(const WaveOperators& ops, Deriv deriv, const FieldSeries& u,
                              const FieldSeries& dt_u) {
  if (deriv == Deriv::kTime) return {dt_u.time_grid(), dt_u.fields(), "d_u"};
  const auto factor = ops.derivative_factor(deriv == Deriv::kX1 ? 1 : 2);
  std::vector<Field> out;
  out.reserve(u.fields().size());
  for (const auto& f : u.fields()) out.push_back(times_i_factor(f, factor));
  return {u.time_grid(), std::move(out), "d_u"};
}

void guard(int n, const IterateNorms& norms) {
  for (double v : {norms.h1_sup, norms.l2_dt_sup, norms.l2t_l4x}) {
    if (!std::isfinite(v) || v > kBlowUpThreshold) {
      throw BlowUpError(n, "iterate " + std::to_string(n) + " blew up (norm " +
                               std::to_string(v) + ")");
    }
  }
}

}  // namespace

nlohmann::json to_json(const IterateRecord& record) {
  return {
      {"n", record.n},
      {"seed", record.seed},
      {"config_hash", record.config_hash},
      {"norms",
       {{"linf_h1", record.norms.h1_sup},
        {"linf_l2_dt", record.norms.l2_dt_sup},
        {"l2t_l4x", record.norms.l2t_l4x}}},
      {"grid", {{"n_points", record.u.grid().n()}, {"box_length", record.u.grid().box_length()}}},
      {"time", {{"T", record.u.time_grid().length()}, {"n_steps", record.u.time_grid().steps()}}},
  };
}

void dump_final_fields(const std::filesystem::path& directory, const std::string& stem,
                       const IterateRecord& record) {
  std::filesystem::create_directories(directory);
  const int last = record.u.time_grid().steps();
  for (const FieldSeries* s : {&record.u, &record.dt_u, &record.d_u}) {
    write_field(directory / (stem + "_" + s->tag() + ".rwfd"), s->at(last), s->tag());
  }
}

IterateNorms compute_norms(const FieldSeries& u, const FieldSeries& dt_u, const FieldSeries& d_u) {
  IterateNorms norms;
  for (int m = 0; m < u.time_grid().nodes(); ++m) {
    norms.h1_sup = std::max(norms.h1_sup, sobolev_norm(u.at(m), 1.0));
    norms.l2_dt_sup = std::max(norms.l2_dt_sup, lp_norm(dt_u.at(m), 2.0));
  }
  norms.l2t_l4x = space_time_norm(d_u, 2.0, 4.0);
  return norms;
}

PicardEngine::PicardEngine(std::shared_ptr<const WaveOperators> ops, Deriv deriv)
    : ops_(std::move(ops)), deriv_(deriv) {
  if (!ops_) throw std::invalid_argument("Picard engine needs wave operators");
}

FreeEvolution PicardEngine::free_evolution(const RandomizedData& data) const {
  const WaveOperators& ops = *ops_;
  if (!(data.grid() == ops.grid())) throw std::invalid_argument("data grid does not match operators");
  const TimeGrid& tg = ops.time_grid();
  const Field f0 = to_spectral(data.phi0_rand);
  const Field f1 = to_spectral(data.phi1_rand);
  const auto p0 = f0.amplitudes();
  const auto p1 = f1.amplitudes();
  const auto r = ops.radius();
  std::vector<Field> u;
  std::vector<Field> dt_u;
  for (int m = 0; m < tg.nodes(); ++m) {
    const auto c = ops.cos_lag(m);
    const auto s = ops.sinc_lag(m);
    std::vector<Complex> a(p0.size());
    std::vector<Complex> b(p0.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = c[i] * p0[i] + s[i] * p1[i];
      b[i] = -r[i] * r[i] * s[i] * p0[i] + c[i] * p1[i];
    }
    u.push_back(Field::spectral(ops.grid(), std::move(a)));
    dt_u.push_back(Field::spectral(ops.grid(), std::move(b)));
  }
  FieldSeries us(tg, std::move(u), "u");
  FieldSeries dts(tg, std::move(dt_u), "dt_u");
  FieldSeries ds = derivative_series(ops, deriv_, us, dts);
  return {std::move(us), std::move(dts), std::move(ds)};
}

IterateRecord PicardEngine::zeroth(const RandomizedData& data) const {
  FreeEvolution free = free_evolution(data);
  IterateNorms norms = compute_norms(free.u, free.dt_u, free.d_u);
  guard(0, norms);
  return {0, std::move(free.u), std::move(free.dt_u), std::move(free.d_u), norms,
          data.draw.seed(), {}};
}

IterateRecord PicardEngine::step(const IterateRecord& zeroth,
                                 const IterateRecord& previous) const {
  const WaveOperators& ops = *ops_;
  const FieldSeries source = dealiased_product(ops, previous.d_u, previous.d_u, "source");
  const FieldSeries du = duhamel(ops, source, DuhamelKernel::kSinc, "u");
  const FieldSeries ddt = duhamel(ops, source, DuhamelKernel::kCos, "dt_u");
  FieldSeries u = combine(1.0, zeroth.u, 1.0, du, "u");
  FieldSeries dt_u = combine(1.0, zeroth.dt_u, 1.0, ddt, "dt_u");
  FieldSeries d_u = derivative_series(ops, deriv_, u, dt_u);
  const IterateNorms norms = compute_norms(u, dt_u, d_u);
  const int n = previous.n + 1;
  guard(n, norms);
  return {n, std::move(u), std::move(dt_u), std::move(d_u), norms, zeroth.seed,
          zeroth.config_hash};
}

std::vector<IterateRecord> PicardEngine::iterate(int n, const RandomizedData& data) const {
  if (n < 0) throw std::invalid_argument("iterate order must be nonnegative");
  std::vector<IterateRecord> records;
  records.reserve(static_cast<std::size_t>(n) + 1);
  records.push_back(zeroth(data));
  for (int k = 1; k <= n; ++k) records.push_back(step(records.front(), records.back()));
  return records;
}

FreeEvolution free_evolution(const RandomizedData& data, const TimeGrid& time_grid, Deriv deriv) {
  PicardEngine engine(std::make_shared<const WaveOperators>(data.grid(), time_grid), deriv);
  return engine.free_evolution(data);
}

IterateRecord picard_iterate(int n, const RandomizedData& data, const TimeGrid& time_grid,
                             Deriv deriv) {
  if (n < 0) throw std::invalid_argument("iterate order must be nonnegative");
  PicardEngine engine(std::make_shared<const WaveOperators>(data.grid(), time_grid), deriv);
  return std::move(engine.iterate(n, data).back());
}

EnergyCheck energy_inequality_check(const IterateRecord& current, const IterateRecord& previous,
                                    const IterateRecord& zeroth) {
  if (previous.n + 1 != current.n && !(current.n == 0 && previous.n == 0)) {
    throw std::invalid_argument("energy check needs consecutive iterates");
  }
  EnergyCheck check;
  check.lhs = current.norms.h1_sup + current.norms.l2_dt_sup;
  check.rhs = zeroth.norms.h1_sup + zeroth.norms.l2_dt_sup +
              previous.norms.l2t_l4x * previous.norms.l2t_l4x;
  check.constant = check.rhs > 0.0 ? check.lhs / check.rhs : 0.0;
  return check;
}

}  // namespace randwave
