#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "randwave/picard/duhamel.hpp"
#include "randwave/randomization/randomized_data.hpp"
#include "randwave/trees/binary_tree.hpp"

namespace randwave {

/// Evaluates tree terms G^tau_{k_1..k_j} over time series: a leaf carrying
/// block k is F_k = d W(t) P_k phi0 and an internal node is A_0 applied to the
/// dealiased product of its children. Requires phi1 = 0. Non-root subtrees are
/// memoized per (encoding, block tuple); one evaluator per thread.
class TreeTermEvaluator {
 public:
  TreeTermEvaluator(std::shared_ptr<const WaveOperators> ops,
                    std::shared_ptr<const BlockDecomposition> decomposition, Deriv deriv);

  /// F_k for an active block; throws std::out_of_range otherwise.
  const FieldSeries& leaf(const BlockIndex& k);

  /// Throws std::invalid_argument when the tuple length differs from the leaf
  /// count and std::out_of_range for an inactive block.
  FieldSeries evaluate(const BinaryTree& tree, std::span<const BlockIndex> blocks);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  const FieldSeries& subtree(const BinaryTree& tree, std::span<const BlockIndex> blocks);
  FieldSeries combine_children(const BinaryTree& tree, std::span<const BlockIndex> blocks);

  std::shared_ptr<const WaveOperators> ops_;
  std::shared_ptr<const BlockDecomposition> decomposition_;
  Deriv deriv_;
  std::map<BlockIndex, FieldSeries> leaves_;
  std::map<std::string, FieldSeries> memo_;
};

FieldSeries evaluate_tree_term(const BinaryTree& tree, std::span<const BlockIndex> blocks,
                               const RandomizedData& data, const TimeGrid& time_grid,
                               Deriv deriv = Deriv::kX1);

inline constexpr int kMaxReconstructOrder = 2;
inline constexpr int kMaxReconstructBlocks = 6;

/// d u^(n) assembled as sum_j sum_{k_1..k_j} eps_{k_1}..eps_{k_j} sum over the
/// level-n trees with j leaves. Throws std::length_error past n = 2 or six
/// active blocks.
FieldSeries reconstruct_iterate(int n, const RandomizedData& data, const TimeGrid& time_grid,
                                Deriv deriv = Deriv::kX1);

/// L^4 Bernstein factor (|S| dxi^2)^(1/4) / sqrt(2 pi) for a spectral support
/// of |S| lattice points.
double bernstein_factor(const Grid& grid, std::size_t support_points);

/// One evaluation of the integrand G~ at a random ordered time configuration.
struct GTildeSample {
  std::string encoding;
  std::vector<BlockIndex> blocks;
  double norm_l4 = 0.0;
  double scale = 0.0;       // sqrt(C_tau) prod ||P_k phi0||_{H^1}
  double measured_c = 0.0;  // (norm_l4 / scale)^(2/(j-1))
  double rigorous_bound = 0.0;  // Bernstein, Hoelder and |m01| <= 1 chain
};

struct GTildeStudy {
  std::vector<GTildeSample> samples;
  double measured_c = 0.0;   // max over samples
  bool rigorous_ok = true;   // every norm below its rigorous bound
};

/// Samples every tree with 2..j_max leaves (j_max <= 4) on random block tuples
/// and random times 0 <= t_{node} <= t_{parent} <= T.
GTildeStudy gtilde_bound_study(const BlockDecomposition& decomposition, Deriv deriv, double T,
                               int j_max, int samples_per_tree, std::uint64_t seed);

}  // namespace randwave
