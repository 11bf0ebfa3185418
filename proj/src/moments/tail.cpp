#include "randwave/moments/tail.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace randwave {

TailBound tail_from_moments(const MomentBound& b, double lambda) {
  if (!(b.C > 0.0) || !(b.N > 0.0) || !(lambda > 0.0)) {
    throw std::invalid_argument("tail bound needs C, N, lambda > 0");
  }
  if (!(b.k >= 1.0) || !(b.p0 >= 1.0)) throw std::invalid_argument("tail bound needs k >= 1 and p0 >= 1");
  constexpr double e = std::numbers::e;
  TailBound t;
  const double n_alpha = std::pow(b.N, b.alpha);
  t.p_star = std::pow(lambda * n_alpha / (e * b.C), 2.0 / b.k);
  if (t.p_star < b.p0) {
    t.clamped = true;
    t.p_star = b.p0;
  }
  t.chebyshev = std::pow(b.C / n_alpha * std::pow(t.p_star, 0.5 * b.k) / lambda, t.p_star);
  t.C1 = std::exp(b.p0);
  t.c = std::pow(e * b.C, -2.0 / b.k);
  t.value = t.C1 * std::exp(-t.c * std::pow(b.N, 2.0 * b.alpha / b.k) * std::pow(lambda, 2.0 / b.k));
  return t;
}

}  // namespace randwave
