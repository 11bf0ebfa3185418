#pragma once

namespace randwave {

/// Moment growth ||F||_{L^p} <= C N^(-alpha) p^(k/2) for all p >= p0.
struct MomentBound {
  double C = 1.0;
  double alpha = 1.0;
  double N = 1.0;
  double k = 1.0;
  double p0 = 1.0;
};

struct TailBound {
  double p_star = 0.0;     // (lambda N^alpha / (e C))^(2/k), clamped to >= p0
  bool clamped = false;
  double chebyshev = 0.0;  // (C N^-alpha p^(k/2) / lambda)^p at p = p_star
  double C1 = 0.0;         // e^p0
  double c = 0.0;          // (e C)^(-2/k)
  double value = 0.0;      // C1 exp(-c N^(2 alpha/k) lambda^(2/k)) >= min(1, chebyshev)
};

/// Throws std::invalid_argument unless C, N, lambda > 0, k >= 1, p0 >= 1.
TailBound tail_from_moments(const MomentBound& bound, double lambda);

}  // namespace randwave
