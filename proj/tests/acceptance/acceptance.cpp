// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each check recomputes its reference values independently of the
// code path under test where that is practical.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "randwave/experiment/config.hpp"
#include "randwave/experiment/report.hpp"
#include "randwave/experiment/runner.hpp"
#include "randwave/moments/combinatorics.hpp"
#include "randwave/moments/khinchine.hpp"
#include "randwave/picard/picard.hpp"
#include "randwave/randomization/data_families.hpp"
#include "randwave/spectral/norms.hpp"
#include "randwave/trees/tree_constants.hpp"
#include "randwave/trees/tree_terms.hpp"

using namespace randwave;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s [%s] (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Field zero(const Grid& g) { return Field::zeros(g, Representation::kSpectral); }

// Reference experiment: Gaussian datum on 128^2, T = 0.5, 64 steps, n <= 3.
ExperimentConfig reference_config() {
  ExperimentConfig c = load_config(std::filesystem::path(RANDWAVE_SOURCE_DIR) / "configs" / "reference.ini");
  c.output_dir = std::filesystem::temp_directory_path() / "randwave_acceptance";
  return c;
}

ExperimentConfig coarse_config(int samples, int n_max) {
  ExperimentConfig c = reference_config();
  c.n_points = 64;
  c.n_steps = 32;
  c.samples = samples;
  c.n_max = n_max;
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome tree_closed_form() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int count = 0;
  for (int j = 1; j <= 7; ++j) {
    for (const auto& tree : enumerate_trees(j)) {
      worst = std::max(worst, std::abs(i_tau_oracle(tree, 1.0) - 1.0 / c_tau(tree).get_d()));
      ++count;
    }
  }
  const double secs = seconds_since(start);
  return {count == 197 && worst <= 1e-9 && secs <= 60.0,
          std::to_string(count) + " trees, max residual " + fmt("%.3g", worst)};
}

Outcome tree_counts() {
  bool ok = true;
  for (int j = 1; j <= 12; ++j) {
    // Catalan(j-1) = (2j-2)! / ((j-1)! j!)
    const BigInt want = factorial(2 * j - 2) / (factorial(j - 1) * factorial(j));
    ok = ok && BigInt(static_cast<unsigned long>(enumerate_trees(j).size())) == want;
  }
  return {ok, "j <= 12"};
}

Outcome c_star_bound() {
  const long expected[] = {1, 3, 63};
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    BigInt prod = 1;
    for (int k = 1; k <= n; ++k)
      for (int e = 0; e < (1 << (n - k)); ++e) prod *= (BigInt(1) << k) - 1;
    ok = ok && prod == expected[n - 1] && c_star_upper(n).value == prod && c_star(1 << n) <= prod;
  }
  for (int n = 0; n <= 20; ++n) {
    BigInt sum = 0;
    for (int k = 1; k <= n; ++k) sum += BigInt(k) << (n - k);
    const CStarUpper u = c_star_upper(n);
    ok = ok && u.identity_holds && u.exponent_sum == sum && sum == (BigInt(1) << (n + 1)) - n - 2;
  }
  return {ok, "c*(2,4,8) = " + to_string(c_star(2)) + "," + to_string(c_star(4)) + "," + to_string(c_star(8))};
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const Grid g(64, 16 * pi);
  const TimeGrid tg(0.5, 128);
  const Field phi0 = lattice_modes(g, {{1.0, 8, 0}, {0.5, 8, 8}});
  auto d = std::make_shared<const BlockDecomposition>(phi0, zero(g));
  if (d->block_indices().size() != 2) return {false, "datum is not 2-block"};
  const RandomizedData data = randomize(d, draw_rademacher(20240611, d->block_indices()));
  double err[3] = {0.0, 0.0, 0.0};
  for (int n = 1; n <= 2; ++n) {
    err[n] = relative_sup_l2_discrepancy(reconstruct_iterate(n, data, tg), picard_iterate(n, data, tg).d_u);
  }
  const double secs = seconds_since(start);
  return {err[1] <= 1e-6 && err[2] <= 1e-5 && secs <= 300.0,
          "n=1 " + fmt("%.3g", err[1]) + ", n=2 " + fmt("%.3g", err[2])};
}

Outcome khinchine_identities() {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int K = 1; K <= 10; ++K) {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> c(static_cast<std::size_t>(K));
      for (auto& v : c) v = normal(rng);
      for (int p : {2, 4, 6, 8}) {
        const double a = enumerated_moment(c, p);
        const double b = multinomial_moment(c, p);
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
      }
    }
  }
  double max_ratio = 0.0;
  std::uniform_int_distribution<int> length(1, 16);
  std::uniform_int_distribution<int> order(1, 5);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> c(static_cast<std::size_t>(length(rng)));
    for (auto& v : c) v = normal(rng);
    max_ratio = std::max(max_ratio, khinchine_ratio(c, 2.0 * order(rng)).ratio);
  }
  const std::vector<double> two{1.0, 1.0};
  const std::vector<double> three{1.0, 1.0, 1.0};
  const bool published = exact_moment(two, 4) == 8.0 && exact_moment(three, 4) == 21.0;
  return {worst <= 1e-12 && max_ratio <= 1.0 && published,
          "max rel diff " + fmt("%.3g", worst) + ", max ratio " + fmt("%.4f", max_ratio)};
}

Outcome stirling_suite() {
  bool ok = stirling2(4, 2) == 7 && 2 * stirling2(4, 2) == 14 && 14 <= 16;
  for (int N = 1; N <= 20; ++N) {
    for (int r = 1; r <= N; ++r) {
      BigInt surj = factorial(static_cast<unsigned>(r)) * stirling2(N, r);
      BigInt rN = pow(BigInt(r), static_cast<unsigned long>(N));
      ok = ok && surj <= rN && surj <= pow(BigInt(r), static_cast<unsigned long>(r)) * pow(BigInt(r), static_cast<unsigned long>(N - r));
      const SurjectionCount s = surjection_count(N, r);
      ok = ok && s.count == surj && s.total_bound && s.refined_bound;
    }
  }
  for (int j = 2; j <= 20; ++j) {
    for (int r = 1; r < j; ++r) {
      const BigInt rhs = binomial(static_cast<unsigned>(j), static_cast<unsigned>(r)) *
                         pow(BigInt(r), static_cast<unsigned long>(j - r));
      ok = ok && 2 * stirling2(j, r) <= rhs && stirling_refined_bound_check(j, r).pass();
    }
  }
  return {ok, "S(4,2) = " + to_string(stirling2(4, 2))};
}

Outcome multiplier_suite() {
  const Grid g(64, 16 * pi);
  double max_symbol = 0.0;
  for (double tau : {0.0, 0.1, 0.5, 1.0, 3.0}) {
    for (Deriv d : {Deriv::kTime, Deriv::kX1, Deriv::kX2}) {
      for (const Complex& s : symbol_table(MultiplierKind::m01(tau, d), g)) max_symbol = std::max(max_symbol, std::abs(s));
    }
  }
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 2.0);
  double worst_gain = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> v(g.size());
    for (auto& x : v) x = normal(rng);
    const Field f = Field::physical(g, std::move(v));
    const Deriv d = static_cast<Deriv>(rep % 3);
    const double out = lp_norm(apply_multiplier(f, MultiplierKind::m01(unit(rng), d)), 2.0);
    worst_gain = std::max(worst_gain, out / lp_norm(f, 2.0) - 1.0);
  }
  const TimeGrid tg(2.0, 128);
  const Field phi0 = gaussian_bump(g, 0.5, 2.0, {8 * pi, 8 * pi});
  auto dec = std::make_shared<const BlockDecomposition>(phi0, zero(g));
  const FreeEvolution e = free_evolution(randomize(dec, draw_rademacher(3, dec->block_indices())), tg);
  const auto energy = [&](int m) {
    return std::pow(sobolev_norm(e.u.at(m), 1.0), 2) + std::pow(lp_norm(e.dt_u.at(m), 2.0), 2);
  };
  double drift = 0.0;
  for (int m = 0; m < tg.nodes(); ++m) drift = std::max(drift, std::abs(energy(m) - energy(0)) / energy(0));
  return {max_symbol <= 1.0 && worst_gain <= 1e-12 && drift <= 1e-10,
          "max |m01| " + fmt("%.6f", max_symbol) + ", gain excess " + fmt("%.2g", worst_gain) +
              ", energy drift " + fmt("%.2g", drift)};
}

// Sup over t of the L2 error of the d_x1 Duhamel integral of the constant
// source cos(x1) on [0, 1]; exactly i xi_1 (1 - cos t) cos(x1) since |xi| = 1.
double duhamel_error(int steps) {
  const Grid g(16, 2 * pi);
  const TimeGrid tg(1.0, steps);
  const Field src = lattice_modes(g, {{1.0, 1, 0}});
  const FieldSeries s(tg, std::vector<Field>(static_cast<std::size_t>(tg.nodes()), src), "source");
  const FieldSeries out = duhamel(s, tg, Deriv::kX1);
  const Field dsrc = apply_multiplier(src, MultiplierKind::spatial_derivative(1));
  double err = 0.0;
  for (int m = 0; m < tg.nodes(); ++m) {
    const double w = 1.0 - std::cos(tg.time(m));
    double e = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) e += std::norm(out.at(m).amplitudes()[i] - w * dsrc.amplitudes()[i]);
    err = std::max(err, std::sqrt(e) * g.dx() / lp_norm(src, 2.0));
  }
  return err;
}

Outcome duhamel_convergence() {
  const double e128 = duhamel_error(128);
  const double e256 = duhamel_error(256);
  const double order = std::log2(e128 / e256);
  return {e256 <= 1e-6 && order >= 1.9, "error " + fmt("%.3g", e256) + ", order " + fmt("%.3f", order)};
}

Outcome monte_carlo_boundedness() {
  const ExperimentReport r = run_experiment(reference_config());
  bool ok = r.calibration.regime_product < 0.5;
  double worst_ratio = 0.0;
  double min_finite = 1.0;
  for (const auto& s : r.orders) min_finite = std::min(min_finite, s.finite_fraction);
  for (const auto& m : r.moments) worst_ratio = std::max(worst_ratio, m.ratio);
  ok = ok && min_finite == 1.0 && worst_ratio <= 1.0 && r.orders.size() == 4;
  return {ok, "C_cal ||phi0|| T " + fmt("%.4f", r.calibration.regime_product) + ", finite " +
                  fmt("%.3f", min_finite) + ", max ratio " + fmt("%.3g", worst_ratio)};
}

Outcome interval_scaling() {
  const ScalingResult s = interval_scaling_study(coarse_config(128, 1));
  bool ok = s.slopes.size() == 2;
  for (double slope : s.slopes) ok = ok && slope >= 0.4 && slope <= 0.6;
  return {ok, "slopes n=0 " + fmt("%.4f", s.slopes.at(0)) + ", n=1 " + fmt("%.4f", s.slopes.at(1))};
}

Outcome tail_domination() {
  const ExperimentReport r = run_experiment(coarse_config(1024, 1));
  const TailResult t = tail_study(r, 1);
  int checked = 0;
  bool ok = true;
  for (const auto& p : t.points) {
    if (p.bound > 1.0) continue;
    ++checked;
    ok = ok && p.empirical <= p.bound;
  }
  return {ok && checked > 0, std::to_string(checked) + " non-vacuous points"};
}

Outcome determinism() {
  ExperimentConfig c = coarse_config(32, 2);
  c.n_steps = 16;
  const auto base = c.output_dir / "determinism";
  std::filesystem::remove_all(base);
  std::vector<std::string> rows;
  for (int workers : {1, 3, 1, 2}) {
    const auto dir = base / ("run" + std::to_string(rows.size()));
    emit_report(run_experiment(c, workers), dir);
    rows.push_back(slurp(dir / "rows.csv"));
  }
  std::filesystem::remove_all(base);
  bool ok = !rows[0].empty();
  for (const auto& r : rows) ok = ok && r == rows[0];
  return {ok, "4 runs with 1, 3, 1, 2 workers"};
}

}  // namespace

int main() {
  criterion(1, "tree closed form", tree_closed_form);
  criterion(2, "tree counts", tree_counts);
  criterion(3, "C* bound and exponent identity", c_star_bound);
  criterion(4, "tree expansion equals direct iteration", oracle_equivalence);
  criterion(5, "Khinchine and moment identities", khinchine_identities);
  criterion(6, "Stirling suite", stirling_suite);
  criterion(7, "multiplier and energy suite", multiplier_suite);
  criterion(8, "Duhamel convergence", duhamel_convergence);
  criterion(9, "Monte Carlo boundedness", monte_carlo_boundedness);
  criterion(10, "interval scaling", interval_scaling);
  criterion(11, "tail domination", tail_domination);
  criterion(12, "determinism", determinism);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
