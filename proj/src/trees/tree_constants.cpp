#include "randwave/trees/tree_constants.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "randwave/core/gauss_legendre.hpp"

namespace randwave {

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigInt c_tau(const BinaryTree& tree) {
  if (tree.is_leaf()) return 1;
  return BigInt(tree.leaves() - 1) * c_tau(tree.left()) * c_tau(tree.right());
}

namespace {

constexpr int kPanelNodes = 32;
constexpr int kPanels = 2;

class Collocation {
 public:
  explicit Collocation(double t) : rule_(make_gauss_legendre(kPanelNodes)), t_(t) {}

  std::size_t size() const { return kPanelNodes * kPanels; }

  // Values of int_0^{x} f at every collocation node, plus the full integral.
  std::vector<double> cumulative(const std::vector<double>& f, double& total) const {
    const double half = 0.5 * t_ / kPanels;
    std::vector<double> out(size());
    double offset = 0.0;
    for (int p = 0; p < kPanels; ++p) {
      double panel = 0.0;
      for (int i = 0; i < kPanelNodes; ++i) {
        double acc = 0.0;
        for (int k = 0; k < kPanelNodes; ++k)
          acc += rule_.integration[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                 f[static_cast<std::size_t>(p * kPanelNodes + k)];
        out[static_cast<std::size_t>(p * kPanelNodes + i)] = offset + half * acc;
      }
      for (int k = 0; k < kPanelNodes; ++k)
        panel += rule_.weights[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(p * kPanelNodes + k)];
      offset += half * panel;
    }
    total = offset;
    return out;
  }

 private:
  GaussLegendre rule_;
  double t_;
};

struct Evaluation {
  std::vector<double> at_nodes;
  double at_end = 1.0;
};

const Evaluation& evaluate(const BinaryTree& tree, const Collocation& col,
                           std::map<std::string, Evaluation>& memo) {
  auto it = memo.find(tree.encoding());
  if (it != memo.end()) return it->second;
  Evaluation e;
  if (tree.is_leaf()) {
    e.at_nodes.assign(col.size(), 1.0);
    e.at_end = 1.0;
  } else {
    const auto& a = evaluate(tree.left(), col, memo).at_nodes;
    const auto& b = evaluate(tree.right(), col, memo).at_nodes;
    std::vector<double> prod(col.size());
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a[i] * b[i];
    e.at_nodes = col.cumulative(prod, e.at_end);
  }
  return memo.emplace(tree.encoding(), std::move(e)).first->second;
}

}  // namespace

double i_tau_oracle(const BinaryTree& tree, double t) {
  if (tree.leaves() > 8) throw std::invalid_argument("quadrature oracle supports j <= 8");
  if (!(t >= 0.0 && t <= 2.0)) throw std::invalid_argument("quadrature oracle needs t in [0, 2]");
  if (tree.is_leaf()) return 1.0;
  if (t == 0.0) return 0.0;
  const Collocation col(t);
  std::map<std::string, Evaluation> memo;
  return evaluate(tree, col, memo).at_end;
}

BigInt c_star(int j) {
  if (j < 1 || j > kMaxEnumeratedLeaves) {
    throw std::invalid_argument("c_star needs 1 <= j <= " + std::to_string(kMaxEnumeratedLeaves));
  }
  // c_tau factorizes over the root split, so the minimum over all trees is the
  // minimum over splits of the children's minima.
  std::vector<BigInt> best(static_cast<std::size_t>(j) + 1);
  best[1] = 1;
  for (int s = 2; s <= j; ++s) {
    BigInt m;
    for (int i = 1; i < s; ++i) {
      BigInt v = BigInt(s - 1) * best[static_cast<std::size_t>(i)] * best[static_cast<std::size_t>(s - i)];
      if (i == 1 || v < m) m = v;
    }
    best[static_cast<std::size_t>(s)] = m;
  }
  return best[static_cast<std::size_t>(j)];
}

CStarUpper c_star_upper(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("c_star_upper needs 0 <= n <= 20");
  CStarUpper out{1, 0, false};
  for (int k = 1; k <= n; ++k) {
    const BigInt base = (BigInt(1) << k) - 1;
    const unsigned long e = 1UL << (n - k);
    out.value *= pow(base, e);
    out.exponent_sum += BigInt(k) * BigInt(e);
  }
  out.identity_holds = out.exponent_sum == (BigInt(1) << (n + 1)) - n - 2;
  return out;
}

std::vector<TreeReportRow> tree_report(int j_min, int j_max) {
  if (j_min < 1 || j_max > 8 || j_min > j_max) throw std::invalid_argument("tree report needs 1 <= j_min <= j_max <= 8");
  std::vector<TreeReportRow> rows;
  for (int j = j_min; j <= j_max; ++j) {
    for (const auto& tree : enumerate_trees(j)) {
      TreeReportRow row;
      row.encoding = tree.encoding();
      row.leaves = j;
      row.c_tau = c_tau(tree);
      row.i_tau_at_one = i_tau_oracle(tree, 1.0);
      row.residual = std::abs(row.i_tau_at_one - 1.0 / row.c_tau.get_d());
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_tree_csv(std::ostream& out, const std::vector<TreeReportRow>& rows) {
  out << "encoding,j,c_tau,i_tau_1,residual\n";
  char buf[64];
  for (const auto& r : rows) {
    out << r.encoding << ',' << r.leaves << ',' << to_string(r.c_tau) << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.i_tau_at_one);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.residual);
    out << buf << '\n';
  }
}

}  // namespace randwave
