#include "randwave/moments/khinchine.hpp"

#include <cmath>
#include <stdexcept>

#include "randwave/core/bigint.hpp"
#include "randwave/core/rng.hpp"

namespace randwave {
namespace {

void check_exact_args(std::span<const double> c, int p) {
  if (c.empty() || static_cast<int>(c.size()) > kMaxExactTerms) {
    throw std::invalid_argument("exact moments need 1 <= K <= 24");
  }
  if (p < 2 || p > kMaxExactOrder || p % 2 != 0) {
    throw std::invalid_argument("exact moments need an even order 2 <= p <= 12");
  }
}

std::vector<double> signed_sums(std::span<const double> c) {
  const std::size_t count = std::size_t{1} << c.size();
  std::vector<double> out(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) s += (mask >> k & 1U) ? -c[k] : c[k];
    out[mask] = s;
  }
  return out;
}

}  // namespace

double enumerated_moment(std::span<const double> c, int p) {
  check_exact_args(c, p);
  // Split the signs into two halves so every pattern sum is one addition of
  // two short exact-order sums.
  const std::size_t h = c.size() / 2;
  const std::vector<double> a = signed_sums(c.first(h));
  const std::vector<double> b = signed_sums(c.subspan(h));
  long double total = 0.0L;
  for (double x : a) {
    long double part = 0.0L;
    for (double y : b) part += std::pow(static_cast<long double>(x) + y, p);
    total += part;
  }
  return static_cast<double>(total / static_cast<long double>(a.size() * b.size()));
}

double multinomial_moment(std::span<const double> c, int p) {
  check_exact_args(c, p);
  // poly[d] = sum over patterns using degree d so far of prod c^(2a)/(2a)!.
  std::vector<long double> poly(static_cast<std::size_t>(p) + 1, 0.0L);
  poly[0] = 1.0L;
  for (double ck : c) {
    std::vector<long double> next(poly.size(), 0.0L);
    for (int d = 0; d <= p; ++d) {
      if (poly[static_cast<std::size_t>(d)] == 0.0L) continue;
      long double term = 1.0L;  // c^e / e!
      for (int e = 0; d + e <= p; ++e) {
        if (e > 0) term *= static_cast<long double>(ck) / e;
        if (e % 2 == 0) next[static_cast<std::size_t>(d + e)] += poly[static_cast<std::size_t>(d)] * term;
      }
    }
    poly = std::move(next);
  }
  long double fact = 1.0L;
  for (int i = 2; i <= p; ++i) fact *= i;
  return static_cast<double>(fact * poly[static_cast<std::size_t>(p)]);
}

double exact_moment(std::span<const double> c, int p) {
  const double a = enumerated_moment(c, p);
  const double b = multinomial_moment(c, p);
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale > 0.0 && std::abs(a - b) > 1e-12 * scale) {
    throw std::logic_error("enumerated and multinomial moments disagree");
  }
  return a;
}

KhinchineRatio khinchine_ratio(std::span<const double> c, double p, std::uint64_t seed) {
  if (!(p >= 2.0)) throw std::invalid_argument("Khinchine ratio needs p >= 2");
  if (c.empty()) throw std::invalid_argument("Khinchine ratio needs coefficients");
  double l2 = 0.0;
  for (double v : c) l2 += v * v;
  l2 = std::sqrt(l2);
  if (l2 == 0.0) throw std::invalid_argument("Khinchine ratio needs a nonzero vector");
  const double denom = std::sqrt(p) * l2;
  const bool even = p == std::floor(p) && static_cast<int>(p) % 2 == 0 && p <= kMaxExactOrder;
  if (even && static_cast<int>(c.size()) <= kMaxExactTerms) {
    return {std::pow(exact_moment(c, static_cast<int>(p)), 1.0 / p) / denom, 0.0, true};
  }
  std::mt19937_64 rng(derive_seed(seed, seed_domain::kRademacher, 0));
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int s = 0; s < kKhinchineSamples; ++s) {
    double acc = 0.0;
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k % 64 == 0) bits = rng();
      acc += (bits & 1U) ? c[k] : -c[k];
      bits >>= 1;
    }
    const double v = std::pow(std::abs(acc), p);
    sum += v;
    sum_sq += v * v;
  }
  const double n = kKhinchineSamples;
  const double mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - mean * mean);
  const double moment_se = std::sqrt(var / n);
  const double ratio = std::pow(mean, 1.0 / p) / denom;
  // d(m^(1/p)) = m^(1/p - 1) dm / p
  const double se = mean > 0.0 ? std::pow(mean, 1.0 / p - 1.0) * moment_se / p / denom : 0.0;
  return {ratio, se, false};
}

DecoupledCheck decoupled_moment_check(const CoefficientSampler& sampler, int K, int p, int trials,
                                      std::uint64_t seed) {
  if (trials < kMinDecoupledTrials) throw std::invalid_argument("decoupled check needs at least 10^4 trials");
  if (K < 1) throw std::invalid_argument("decoupled check needs K >= 1");
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("decoupled check needs an even p >= 2");
  double s_lhs = 0.0, s_rhs = 0.0, s_ll = 0.0, s_rr = 0.0, s_lr = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 coeff(derive_seed(seed, seed_domain::kCoefficients, static_cast<std::uint64_t>(t)));
    std::mt19937_64 signs(derive_seed(seed, seed_domain::kRademacher, static_cast<std::uint64_t>(t)));
    double sum = 0.0;
    double sq = 0.0;
    std::uint64_t bits = 0;
    for (int k = 0; k < K; ++k) {
      const double b = sampler(coeff, k);
      if (k % 64 == 0) bits = signs();
      sum += (bits & 1U) ? b : -b;
      bits >>= 1;
      sq += b * b;
    }
    const double l = std::pow(std::abs(sum), p);
    const double r = std::pow(sq, 0.5 * p);
    s_lhs += l;
    s_rhs += r;
    s_ll += l * l;
    s_rr += r * r;
    s_lr += l * r;
  }
  const double n = trials;
  const double ml = s_lhs / n;
  const double mr = s_rhs / n;
  DecoupledCheck out;
  out.lhs = std::pow(ml, 1.0 / p);
  out.rhs = std::pow(mr, 1.0 / p);
  out.constant = mr > 0.0 ? out.lhs / (std::sqrt(p) * out.rhs) : 0.0;
  if (ml > 0.0 && mr > 0.0) {
    // Delta method on log(ml/mr)/p with the sample covariance.
    const double vl = s_ll / n - ml * ml;
    const double vr = s_rr / n - mr * mr;
    const double cov = s_lr / n - ml * mr;
    const double var_log = (vl / (ml * ml) + vr / (mr * mr) - 2.0 * cov / (ml * mr)) / n;
    out.standard_error = out.constant * std::sqrt(std::max(0.0, var_log)) / p;
  }
  out.pass = out.constant <= 1.0;
  return out;
}

mpq_class normconstant_factor(std::span<const int> k) {
  unsigned j = 0;
  for (int v : k) {
    if (v < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
    j += static_cast<unsigned>(v);
  }
  mpq_class f(factorial(2 * j), factorial(j));
  for (int v : k) f *= mpq_class(factorial(static_cast<unsigned>(v)), factorial(2 * static_cast<unsigned>(v)));
  f.canonicalize();
  return f;
}

int normconstant_violations(int j_max, int count, std::uint64_t seed) {
  if (j_max < 1) throw std::invalid_argument("normconstant check needs j_max >= 1");
  std::mt19937_64 rng(derive_seed(seed, seed_domain::kCoefficients, 0));
  std::uniform_int_distribution<int> pick_j(1, j_max);
  int violations = 0;
  for (int s = 0; s < count; ++s) {
    const int j = pick_j(rng);
    std::uniform_int_distribution<int> pick_n(1, j);
    const int n = pick_n(rng);
    // Random composition of j into n nonnegative parts.
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    std::uniform_int_distribution<int> slot(0, n - 1);
    for (int q = 0; q < j; ++q) ++k[static_cast<std::size_t>(slot(rng))];
    const mpq_class cap(factorial(2 * static_cast<unsigned>(j)), factorial(static_cast<unsigned>(j)));
    if (normconstant_factor(k) > cap) ++violations;
  }
  return violations;
}

}  // namespace randwave
