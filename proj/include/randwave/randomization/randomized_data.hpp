#pragma once

#include <memory>
#include <vector>

#include "randwave/randomization/rademacher.hpp"
#include "randwave/spectral/field.hpp"

namespace randwave {

/// Blocks whose combined projection norm is at or below this are dropped.
inline constexpr double kBlockThreshold = 1e-14;

/// The real data carried by one sign class {k, -k}.
struct DataBlock {
  BlockIndex k;  // canonical representative
  Field phi0;    // P_k phi0 + P_{-k} phi0, spectral
  Field phi1;
};

/// Unit-scale decomposition of (phi0, phi1) over sign classes, restricted to
/// classes with nonzero content. Independent of any random draw.
class BlockDecomposition {
 public:
  /// Throws std::invalid_argument when the two fields live on different grids.
  BlockDecomposition(const Field& phi0, const Field& phi1);

  const Grid& grid() const { return grid_; }
  const std::vector<DataBlock>& blocks() const { return blocks_; }
  std::vector<BlockIndex> block_indices() const;
  const Field& phi0() const { return phi0_; }
  const Field& phi1() const { return phi1_; }
  bool has_velocity() const { return has_velocity_; }
  /// Throws std::out_of_range for an inactive block.
  const DataBlock& block(const BlockIndex& k) const;

 private:
  Grid grid_;
  Field phi0_;
  Field phi1_;
  std::vector<DataBlock> blocks_;
  bool has_velocity_ = false;
};

/// Randomized initial data phi^omega = (sum eps_k P_k phi0, sum nu_k P_k phi1).
/// Signs are shared within a sign class {k, -k} so both sums stay real.
struct RandomizedData {
  std::shared_ptr<const BlockDecomposition> decomposition;
  RademacherDraw draw;
  Field phi0_rand;  // spectral
  Field phi1_rand;  // spectral

  const Grid& grid() const { return decomposition->grid(); }
};

/// Assembles the randomized sums from a precomputed decomposition. The draw
/// must cover every active block.
RandomizedData randomize(std::shared_ptr<const BlockDecomposition> decomposition,
                         const RademacherDraw& draw);

RandomizedData randomize(const Field& phi0, const Field& phi1, const RademacherDraw& draw);

}  // namespace randwave
