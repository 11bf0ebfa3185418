#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace randwave {

/// Linear-interpolation quantile (type 7) of unsorted data; q in [0, 1].
double quantile(std::span<const double> values, double q);
double median(std::span<const double> values);
double mean(std::span<const double> values);

/// (M^-1 sum x_i^p)^(1/p).
double plugin_moment(std::span<const double> values, double p);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Percentile bootstrap (2.5%, 97.5%) of plugin_moment over `resamples`
/// resamples drawn from a generator seeded with `seed`.
Interval bootstrap_moment_ci(std::span<const double> values, double p, int resamples,
                             std::uint64_t seed);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least squares y = slope x + intercept; throws std::invalid_argument for
/// fewer than 2 points or constant x.
LineFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace randwave
