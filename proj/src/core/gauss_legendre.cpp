#include "randwave/core/gauss_legendre.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace randwave {

double legendre(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

GaussLegendre make_gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs n >= 1");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = -std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double p = legendre(n, x);
      const double pm1 = legendre(n - 1, x);
      dp = n * (x * p - pm1) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double pm1 = legendre(n - 1, x);
    const double p = legendre(n, x);
    dp = n * (x * p - pm1) / (x * x - 1.0);
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }

  // Lagrange basis through the nodes, expanded in Legendre polynomials:
  //   l_k(x) = w_k * sum_{m<n} (2m+1)/2 * P_m(x_k) P_m(x),
  // and integral_{-1}^{x} P_m = (P_{m+1}(x) - P_{m-1}(x)) / (2m+1) for m >= 1.
  rule.integration.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    const double xi = rule.nodes[i];
    std::vector<double> p(n + 1);
    for (int m = 0; m <= n; ++m) p[m] = legendre(m, xi);
    for (int k = 0; k < n; ++k) {
      const double xk = rule.nodes[k];
      double acc = 0.5 * (xi + 1.0);
      for (int m = 1; m < n; ++m) {
        acc += 0.5 * legendre(m, xk) * (p[m + 1] - p[m - 1]);
      }
      rule.integration[i][k] = rule.weights[k] * acc;
    }
  }
  return rule;
}

}  // namespace randwave
