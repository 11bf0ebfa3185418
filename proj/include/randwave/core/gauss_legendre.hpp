#pragma once

#include <vector>

namespace randwave {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;
  /// integration[i][k] = integral from -1 to nodes[i] of the k-th Lagrange
  /// basis polynomial through `nodes`. Exact for interpolants of degree < n.
  std::vector<std::vector<double>> integration;
};

/// Builds the n-point rule (n >= 1) by Newton iteration on P_n.
GaussLegendre make_gauss_legendre(int n);

/// Legendre polynomial P_n(x) by the three-term recurrence.
double legendre(int n, double x);

}  // namespace randwave
