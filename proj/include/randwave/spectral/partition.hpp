#pragma once

#include <compare>
#include <vector>

#include "randwave/spectral/field.hpp"

namespace randwave {

/// Integer block index k in Z^2; the block is centered at frequency k.
struct BlockIndex {
  int k1 = 0;
  int k2 = 0;
  auto operator<=>(const BlockIndex&) const = default;
  BlockIndex operator-() const { return {-k1, -k2}; }
};

/// One-dimensional C^2 bump: 1 on [-1/4, 1/4], a quintic smoothstep ramp on
/// 1/4 < |x| < 3/4, zero beyond. Integer translates sum to one.
double partition_bump(double x);

/// Half-width of the support of partition_bump.
inline constexpr double kBumpSupport = 0.75;
/// Half-width of the plateau where partition_bump == 1.
inline constexpr double kBumpPlateau = 0.25;

/// Unit-scale frequency partition psi(xi - k) = eta(xi_1 - k_1) eta(xi_2 - k_2)
/// restricted to the blocks that touch the grid's frequency lattice.
class UnitPartition {
 public:
  explicit UnitPartition(const Grid& grid);

  const Grid& grid() const { return grid_; }
  /// Blocks cover k_i in [-max_block, max_block].
  int max_block() const { return max_block_; }
  bool contains(const BlockIndex& k) const;
  std::vector<BlockIndex> blocks() const;

  /// Representatives of the sign classes {k, -k}: k = 0 and the half-lattice
  /// with k1 > 0 or (k1 == 0 and k2 > 0).
  std::vector<BlockIndex> paired_blocks() const;
  static bool is_canonical(const BlockIndex& k);

  double weight(const BlockIndex& k, int i1, int i2) const;

 private:
  Grid grid_;
  int max_block_;
};

/// P_k f: spectral amplitudes weighted by psi(xi - k). Complex-valued in
/// general; the result is spectral. Throws std::out_of_range for k outside
/// the partition.
Field unit_projection(const Field& field, const BlockIndex& k);

/// P_k f + P_{-k} f (just P_0 f for k = 0): the real part of the data carried
/// by the sign class of k.
Field paired_projection(const Field& field, const BlockIndex& k);

/// Largest |sum_k psi(xi - k) - 1| over the lattice.
double partition_of_unity_defect(const UnitPartition& partition);

}  // namespace randwave
