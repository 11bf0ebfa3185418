#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randwave/core/verdict.hpp"
#include "randwave/experiment/config.hpp"
#include "randwave/experiment/statistics.hpp"
#include "randwave/moments/tail.hpp"
#include "randwave/picard/duhamel.hpp"
#include "randwave/randomization/randomized_data.hpp"

namespace randwave {

/// Frozen constant for the moment bound, taken from the zeroth iterate:
/// C_cal = (sum_k ||F_k||^2_{L^2_t L^4_x})^(1/2) / (||phi0||_{H^1} T^(1/2)),
/// summed over sign classes. With this C the zeroth-order bound holds for
/// every p >= 4 by Khinchine and Minkowski.
struct Calibration {
  double c_cal = 0.0;
  double phi0_h1 = 0.0;
  double T = 0.0;
  double regime_product = 0.0;  // c_cal ||phi0|| T, must stay below 1/2
  std::size_t active_blocks = 0;
};

Calibration calibrate(const BlockDecomposition& decomposition, const WaveOperators& ops,
                      Deriv deriv);

/// C_cal p^(2^n / 2) ||phi0|| T^(1/2) (2^n)!.
double moment_bound(const Calibration& calibration, int n, double p);

struct SampleRow {
  int sample = 0;
  std::uint64_t seed = 0;
  int n = 0;
  bool finite = true;
  double h1_sup = 0.0;
  double l2_dt_sup = 0.0;
  double l2t_l4x = 0.0;
  double energy_constant = 0.0;  // NaN at n = 0 and for blown-up samples
};

struct OrderSummary {
  int n = 0;
  double finite_fraction = 0.0;
  double mean = 0.0;
  double median = 0.0;
  double q05 = 0.0, q25 = 0.0, q75 = 0.0, q95 = 0.0;
  double energy_constant_max = 0.0;
};

struct MomentRow {
  int n = 0;
  int p = 0;
  double moment = 0.0;
  Interval ci;
  double bound = 0.0;
  double ratio = 0.0;  // moment / bound, 0 when both vanish
  bool pass = false;   // bound exceeds the upper confidence limit
};

struct ScalingResult {
  std::vector<double> intervals;
  std::vector<std::vector<double>> medians;  // [n][interval]
  std::vector<double> slopes;                // per n
  std::vector<bool> monotone;                // median nondecreasing in T
};

struct TailPoint {
  double lambda = 0.0;
  double empirical = 0.0;
  double bound = 0.0;
  bool vacuous = false;  // bound > 1: recorded, never failed
  bool pass = true;
};

struct TailResult {
  int n = 0;
  MomentBound moment_bound;
  std::vector<TailPoint> points;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string config_hash;
  Calibration calibration;
  std::vector<std::uint64_t> sample_seeds;
  std::vector<SampleRow> rows;  // sample-major, then n
  std::vector<OrderSummary> orders;
  std::vector<MomentRow> moments;
  std::optional<ScalingResult> scaling;
  std::optional<TailResult> tail;
  std::vector<Verdict> verdicts;

  bool all_pass() const { return randwave::all_pass(verdicts); }
};

/// Worker count from RANDWAVE_WORKERS, else the hardware concurrency (>= 1).
int worker_count();

/// Monte Carlo over config.samples draws; rows are merged by sample index so
/// the report does not depend on `workers`. Throws std::invalid_argument for
/// an invalid config, including a small-regime violation when enforced.
ExperimentReport run_experiment(const ExperimentConfig& config, int workers = worker_count());

/// Medians of ||d u^(n)||_{L^2_t L^4_x} over the interval list and the fitted
/// log-log slope per n. Needs at least 4 successively halved intervals and 3
/// finite medians per order.
ScalingResult interval_scaling_study(const ExperimentConfig& config, int workers = worker_count());

inline constexpr int kMinTailSamples = 512;
inline constexpr double kTailP0 = 4.0;

/// Empirical tail of ||d u^(n)|| against the moment-derived bound with
/// k = 2^n, alpha = 1, N^-1 = 2^n ||phi0|| T^(1/2), C = C_cal (2^n)! / 2^n.
/// An empty lambda grid is replaced by a log grid reaching well past the
/// point where the bound drops below one.
TailResult tail_study(const ExperimentReport& report, int n, std::vector<double> lambdas = {});

/// Verdicts for scaling and tail results, appended by the CLI.
std::vector<Verdict> scaling_verdicts(const ScalingResult& result);
std::vector<Verdict> tail_verdicts(const TailResult& result);

}  // namespace randwave
