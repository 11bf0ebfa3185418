#include "randwave/experiment/runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "randwave/core/rng.hpp"
#include "randwave/picard/picard.hpp"
#include "randwave/spectral/norms.hpp"

namespace randwave {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string order_label(int n) { return "n=" + std::to_string(n); }

template <typename Fn>
void parallel_for(int count, int workers, Fn fn) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

RademacherDraw sample_draw(std::uint64_t seed, const std::vector<BlockIndex>& blocks) {
  if (blocks.empty()) return RademacherDraw(seed, {}, {});
  return draw_rademacher(seed, blocks);
}

}  // namespace

Calibration calibrate(const BlockDecomposition& decomposition, const WaveOperators& ops,
                      Deriv deriv) {
  const TimeGrid& tg = ops.time_grid();
  Calibration cal;
  cal.T = tg.length();
  cal.phi0_h1 = sobolev_norm(decomposition.phi0(), 1.0);
  cal.active_blocks = decomposition.blocks().size();
  const auto r = ops.radius();
  const auto factor = ops.derivative_factor(deriv == Deriv::kX2 ? 2 : 1);
  double sum = 0.0;
  for (const auto& block : decomposition.blocks()) {
    const Field p = to_spectral(block.phi0);
    const auto a = p.amplitudes();
    double acc = 0.0;
    for (int m = 0; m < tg.nodes(); ++m) {
      const auto c = ops.cos_lag(m);
      const auto s = ops.sinc_lag(m);
      std::vector<Complex> v(a.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = deriv == Deriv::kTime ? -r[i] * r[i] * s[i] * a[i]
                                     : Complex(0.0, factor[i] * c[i]) * a[i];
      }
      const double l4 = lp_norm(Field::spectral(ops.grid(), std::move(v)), 4.0);
      acc += ((m == 0 || m == tg.steps()) ? 0.5 : 1.0) * l4 * l4;
    }
    sum += acc * tg.dt();
  }
  cal.c_cal = cal.phi0_h1 > 0.0 ? std::sqrt(sum) / (cal.phi0_h1 * std::sqrt(cal.T)) : 0.0;
  cal.regime_product = cal.c_cal * cal.phi0_h1 * cal.T;
  return cal;
}

double moment_bound(const Calibration& c, int n, double p) {
  const int j = 1 << n;
  return c.c_cal * std::pow(p, 0.5 * j) * c.phi0_h1 * std::sqrt(c.T) * factorial_d(j);
}

int worker_count() {
  if (const char* env = std::getenv("RANDWAVE_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

ExperimentReport run_experiment(const ExperimentConfig& config, int workers) {
  validate_static(config);
  const Grid grid(config.n_points, config.box_length);
  const TimeGrid tg(config.T, config.n_steps);
  const Field phi0 = make_phi0(grid, config.data);
  auto decomposition = std::make_shared<const BlockDecomposition>(
      phi0, Field::zeros(grid, Representation::kSpectral));
  auto ops = std::make_shared<const WaveOperators>(grid, tg);

  ExperimentReport report;
  report.config = config;
  report.config_hash = config.hash();
  report.calibration = calibrate(*decomposition, *ops, config.deriv);
  if (config.enforce_small_regime && !(report.calibration.regime_product < 0.5)) {
    throw std::invalid_argument("outside the small-interval regime: C_cal ||phi0|| T = " +
                                format_double(report.calibration.regime_product));
  }

  const PicardEngine engine(ops, config.deriv);
  const std::vector<BlockIndex> blocks = decomposition->block_indices();
  const int orders = config.n_max + 1;
  report.sample_seeds.resize(static_cast<std::size_t>(config.samples));
  report.rows.resize(static_cast<std::size_t>(config.samples) * static_cast<std::size_t>(orders));

  parallel_for(config.samples, workers, [&](int i) {
    const std::uint64_t seed = derive_seed(config.base_seed, seed_domain::kSample, static_cast<std::uint64_t>(i));
    report.sample_seeds[static_cast<std::size_t>(i)] = seed;
    const RandomizedData data = randomize(decomposition, sample_draw(seed, blocks));
    SampleRow* row = &report.rows[static_cast<std::size_t>(i) * static_cast<std::size_t>(orders)];
    for (int n = 0; n < orders; ++n) row[n] = {i, seed, n, false, kNaN, kNaN, kNaN, kNaN};
    try {
      std::optional<IterateRecord> zeroth;
      std::optional<IterateRecord> previous;
      for (int n = 0; n < orders; ++n) {
        IterateRecord rec = n == 0 ? engine.zeroth(data) : engine.step(*zeroth, *previous);
        rec.config_hash = report.config_hash;
        SampleRow& r = row[n];
        r.finite = true;
        r.h1_sup = rec.norms.h1_sup;
        r.l2_dt_sup = rec.norms.l2_dt_sup;
        r.l2t_l4x = rec.norms.l2t_l4x;
        if (n > 0) r.energy_constant = energy_inequality_check(rec, *previous, *zeroth).constant;
        if (config.partial) {
          dump_final_fields(config.output_dir / "fields",
                            "s" + std::to_string(i) + "_n" + std::to_string(n), rec);
        }
        if (n == 0) zeroth = rec;
        previous = std::move(rec);
      }
    } catch (const BlowUpError&) {
      // Remaining orders stay flagged as non-finite.
    }
  });

  for (int n = 0; n < orders; ++n) {
    std::vector<double> values;
    OrderSummary s;
    s.n = n;
    for (int i = 0; i < config.samples; ++i) {
      const SampleRow& r = report.rows[static_cast<std::size_t>(i * orders + n)];
      if (r.finite) {
        values.push_back(r.l2t_l4x);
        if (n > 0) s.energy_constant_max = std::max(s.energy_constant_max, r.energy_constant);
      }
    }
    s.finite_fraction = static_cast<double>(values.size()) / config.samples;
    report.verdicts.push_back({"finite_fraction", order_label(n), s.finite_fraction, 1.0,
                               s.finite_fraction == 1.0});
    if (!values.empty()) {
      s.mean = mean(values);
      s.median = median(values);
      s.q05 = quantile(values, 0.05);
      s.q25 = quantile(values, 0.25);
      s.q75 = quantile(values, 0.75);
      s.q95 = quantile(values, 0.95);
      for (int p : config.p_list) {
        MomentRow m;
        m.n = n;
        m.p = p;
        m.moment = plugin_moment(values, p);
        m.ci = bootstrap_moment_ci(values, p, config.bootstrap,
                                   derive_seed(config.base_seed, seed_domain::kBootstrap,
                                               static_cast<std::uint64_t>(n * 1000 + p)));
        m.bound = moment_bound(report.calibration, n, p);
        m.ratio = m.bound > 0.0 ? m.moment / m.bound : 0.0;
        m.pass = m.ci.upper == 0.0 || m.bound > m.ci.upper;
        report.verdicts.push_back({"moment_ratio", order_label(n) + " p=" + std::to_string(p),
                                   m.bound > 0.0 ? m.ci.upper / m.bound : 0.0, 1.0, m.pass});
        report.moments.push_back(m);
      }
    }
    report.orders.push_back(s);
  }
  return report;
}

ScalingResult interval_scaling_study(const ExperimentConfig& config, int workers) {
  if (config.interval_list.size() < 4) throw std::invalid_argument("scaling study needs at least 4 intervals");
  ScalingResult result;
  result.intervals = config.interval_list;
  const int orders = config.n_max + 1;
  result.medians.assign(static_cast<std::size_t>(orders), {});
  for (double T : config.interval_list) {
    ExperimentConfig c = config;
    c.T = T;
    const ExperimentReport r = run_experiment(c, workers);
    for (int n = 0; n < orders; ++n) {
      const auto& s = r.orders[static_cast<std::size_t>(n)];
      result.medians[static_cast<std::size_t>(n)].push_back(s.finite_fraction > 0.0 ? s.median : kNaN);
    }
  }
  for (int n = 0; n < orders; ++n) {
    std::vector<double> x;
    std::vector<double> y;
    const auto& med = result.medians[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < med.size(); ++i) {
      if (std::isfinite(med[i]) && med[i] > 0.0) {
        x.push_back(std::log(result.intervals[i]));
        y.push_back(std::log(med[i]));
      }
    }
    if (x.size() < 3) throw std::invalid_argument("degenerate scaling fit: fewer than 3 finite medians");
    result.slopes.push_back(least_squares(x, y).slope);
    bool mono = true;
    for (std::size_t i = 1; i < med.size(); ++i) {
      // intervals are listed in decreasing order
      if (!(med[i] <= med[i - 1])) mono = false;
    }
    result.monotone.push_back(mono);
  }
  return result;
}

TailResult tail_study(const ExperimentReport& report, int n, std::vector<double> lambdas) {
  if (n < 0 || n > 2 || n > report.config.n_max) throw std::invalid_argument("tail study needs 0 <= n <= min(2, n_max)");
  if (report.config.samples < kMinTailSamples) throw std::invalid_argument("tail study needs at least 512 samples");
  const int orders = report.config.n_max + 1;
  std::vector<double> values;
  for (int i = 0; i < report.config.samples; ++i) {
    const SampleRow& r = report.rows[static_cast<std::size_t>(i * orders + n)];
    // A blown-up sample exceeds every lambda.
    values.push_back(r.finite ? r.l2t_l4x : std::numeric_limits<double>::infinity());
  }
  const Calibration& cal = report.calibration;
  const int j = 1 << n;
  TailResult result;
  result.n = n;
  result.moment_bound = {cal.c_cal * factorial_d(j) / j, 1.0,
                         1.0 / (j * cal.phi0_h1 * std::sqrt(cal.T)), static_cast<double>(j), kTailP0};
  if (!(result.moment_bound.C > 0.0)) throw std::invalid_argument("tail study needs nonzero data");
  if (lambdas.empty()) {
    // lambda where the closed-form bound equals one
    const MomentBound& b = result.moment_bound;
    const double lambda_one =
        std::pow(b.p0 / tail_from_moments(b, 1.0).c, b.k / 2.0) / std::pow(b.N, b.alpha);
    const double lo = 0.5 * quantile(values, 0.0);
    const double hi = 4.0 * std::max(lambda_one, quantile(values, 1.0));
    const int points = std::max(2, report.config.tail_points);
    for (int q = 0; q < points; ++q) {
      lambdas.push_back(lo * std::pow(hi / lo, static_cast<double>(q) / (points - 1)));
    }
  }
  for (double lambda : lambdas) {
    TailPoint pt;
    pt.lambda = lambda;
    int above = 0;
    for (double v : values) above += v > lambda ? 1 : 0;
    pt.empirical = static_cast<double>(above) / static_cast<double>(values.size());
    pt.bound = tail_from_moments(result.moment_bound, lambda).value;
    pt.vacuous = pt.bound > 1.0;
    pt.pass = pt.vacuous || pt.empirical <= pt.bound;
    result.points.push_back(pt);
  }
  return result;
}

std::vector<Verdict> scaling_verdicts(const ScalingResult& result) {
  std::vector<Verdict> out;
  for (std::size_t n = 0; n < result.slopes.size() && n <= 1; ++n) {
    const double s = result.slopes[n];
    out.push_back({"scaling_slope", order_label(static_cast<int>(n)) + " range=[0.4,0.6]", s, 0.5,
                   s >= 0.4 && s <= 0.6});
  }
  for (std::size_t n = 0; n < result.monotone.size(); ++n) {
    out.push_back({"scaling_monotone", order_label(static_cast<int>(n)), result.monotone[n] ? 1.0 : 0.0,
                   1.0, result.monotone[n]});
  }
  return out;
}

std::vector<Verdict> tail_verdicts(const TailResult& result) {
  int checked = 0;
  int failed = 0;
  double worst = 0.0;
  for (const auto& p : result.points) {
    if (p.vacuous) continue;
    ++checked;
    if (!p.pass) ++failed;
    if (p.bound > 0.0) worst = std::max(worst, p.empirical / p.bound);
  }
  return {{"tail_domination", order_label(result.n) + " points=" + std::to_string(checked), worst, 1.0,
           failed == 0 && checked > 0}};
}

}  // namespace randwave
