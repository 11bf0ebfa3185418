#pragma once

#include <iosfwd>
#include <vector>

#include "randwave/core/bigint.hpp"
#include "randwave/trees/binary_tree.hpp"

namespace randwave {

/// Catalan(n) = binomial(2n, n) / (n + 1).
BigInt catalan(unsigned n);

/// C_leaf = 1, C_node = (j - 1) C_left C_right with j the node's leaf count.
BigInt c_tau(const BinaryTree& tree);

/// Iterated time integral I(t) with I_leaf = 1 and
/// I_node(t) = int_0^t I_left(s) I_right(s) ds, evaluated by composite
/// Gauss-Legendre collocation (2 panels of 32 nodes). Requires j <= 8 and
/// 0 <= t <= 2; throws std::invalid_argument otherwise.
double i_tau_oracle(const BinaryTree& tree, double t);

/// Minimum of c_tau over all trees with j leaves, 1 <= j <= 14.
BigInt c_star(int j);

struct CStarUpper {
  BigInt value;            // prod_{k=1}^n (2^k - 1)^(2^(n-k))
  BigInt exponent_sum;     // sum_{k=1}^n k 2^(n-k)
  bool identity_holds;     // exponent_sum == 2^(n+1) - n - 2
};

/// Requires 0 <= n <= 20.
CStarUpper c_star_upper(int n);

struct TreeReportRow {
  std::string encoding;
  int leaves = 0;
  BigInt c_tau;
  double i_tau_at_one = 0.0;
  double residual = 0.0;  // |I(1) - 1/C_tau|
};

/// One row per tree with j_min..j_max leaves (j_max <= 8).
std::vector<TreeReportRow> tree_report(int j_min, int j_max);

/// CSV with header encoding,j,c_tau,i_tau_1,residual.
void write_tree_csv(std::ostream& out, const std::vector<TreeReportRow>& rows);

}  // namespace randwave
