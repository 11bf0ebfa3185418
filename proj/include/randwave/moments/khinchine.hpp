#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace randwave {

inline constexpr int kMaxExactTerms = 24;
inline constexpr int kMaxExactOrder = 12;

/// E|sum eps_k c_k|^p by enumerating all 2^K sign patterns. Requires K <= 24
/// and even 2 <= p <= 12; throws std::invalid_argument otherwise.
double enumerated_moment(std::span<const double> c, int p);

/// The same moment from the multinomial expansion: only even exponent
/// patterns survive, each weighted by p! / prod (2 a_k)!.
double multinomial_moment(std::span<const double> c, int p);

/// Enumerated moment, cross-checked against the multinomial form; throws
/// std::logic_error if they differ by more than 1e-12 relative.
double exact_moment(std::span<const double> c, int p);

struct KhinchineRatio {
  double ratio = 0.0;         // ||sum eps c||_p / (sqrt(p) ||c||_2)
  double standard_error = 0.0;  // 0 when exact
  bool exact = false;
};

inline constexpr int kKhinchineSamples = 1'000'000;

/// Exact for even integer p <= 12 and K <= 24, Monte Carlo otherwise. Throws
/// std::invalid_argument for p < 2, an empty or zero vector.
KhinchineRatio khinchine_ratio(std::span<const double> c, double p, std::uint64_t seed = 1);

/// Draws b_k (k = 0..K-1) from a private stream independent of the signs.
using CoefficientSampler = std::function<double(std::mt19937_64&, int k)>;

struct DecoupledCheck {
  double lhs = 0.0;       // ||sum eps_k b_k||_{L^p}
  double rhs = 0.0;       // ||(sum |b_k|^2)^(1/2)||_{L^p}
  double constant = 0.0;  // lhs / (sqrt(p) rhs)
  double standard_error = 0.0;  // of the constant, delta method
  bool pass = false;      // constant <= 1
};

inline constexpr int kMinDecoupledTrials = 10'000;

/// Monte Carlo over `trials` independent (b, eps) pairs; b and eps use
/// separate seed domains. Throws std::invalid_argument for fewer than 10^4
/// trials, K < 1 or odd p.
DecoupledCheck decoupled_moment_check(const CoefficientSampler& sampler, int K, int p, int trials,
                                      std::uint64_t seed);

/// (2j)!/j! prod k_i!/(2k_i)! for a multi-index with sum k_i = j: the ratio of
/// the even-moment expansion coefficient to the square-function one.
mpq_class normconstant_factor(std::span<const int> k);

/// Checks normconstant_factor <= (2j)!/j! exactly on `count` random
/// multi-indices with 1 <= j <= j_max. Returns the number of violations.
int normconstant_violations(int j_max, int count, std::uint64_t seed);

}  // namespace randwave
