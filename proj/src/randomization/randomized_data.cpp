#include "randwave/randomization/randomized_data.hpp"

#include <memory>
#include <stdexcept>

#include "randwave/spectral/norms.hpp"

namespace randwave {

BlockDecomposition::BlockDecomposition(const Field& phi0, const Field& phi1)
    : grid_(phi0.grid()), phi0_(to_spectral(phi0)), phi1_(to_spectral(phi1)) {
  if (!(phi0.grid() == phi1.grid())) {
    throw std::invalid_argument("phi0 and phi1 are on different grids");
  }
  has_velocity_ = lp_norm(phi1_, 2.0) > kBlockThreshold;
  const UnitPartition partition(grid_);
  for (const auto& k : partition.paired_blocks()) {
    Field p0 = paired_projection(phi0_, k);
    Field p1 = has_velocity_ ? paired_projection(phi1_, k)
                             : Field::zeros(grid_, Representation::kSpectral);
    if (lp_norm(p0, 2.0) + lp_norm(p1, 2.0) > kBlockThreshold) {
      blocks_.push_back({k, std::move(p0), std::move(p1)});
    }
  }
}

std::vector<BlockIndex> BlockDecomposition::block_indices() const {
  std::vector<BlockIndex> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.k);
  return out;
}

const DataBlock& BlockDecomposition::block(const BlockIndex& k) const {
  for (const auto& b : blocks_)
    if (b.k == k) return b;
  throw std::out_of_range("block is not active in this decomposition");
}

RandomizedData randomize(std::shared_ptr<const BlockDecomposition> decomposition,
                         const RademacherDraw& draw) {
  const Grid& grid = decomposition->grid();
  std::vector<Complex> sum0(grid.size());
  std::vector<Complex> sum1(grid.size());
  for (const auto& block : decomposition->blocks()) {
    const double e = draw.sign(block.k, Channel::kEpsilon);
    auto a0 = block.phi0.amplitudes();
    for (std::size_t i = 0; i < a0.size(); ++i) sum0[i] += e * a0[i];
    if (decomposition->has_velocity()) {
      const double v = draw.sign(block.k, Channel::kNu);
      auto a1 = block.phi1.amplitudes();
      for (std::size_t i = 0; i < a1.size(); ++i) sum1[i] += v * a1[i];
    }
  }
  return {std::move(decomposition), draw, Field::spectral(grid, std::move(sum0)),
          Field::spectral(grid, std::move(sum1))};
}

RandomizedData randomize(const Field& phi0, const Field& phi1, const RademacherDraw& draw) {
  return randomize(std::make_shared<const BlockDecomposition>(phi0, phi1), draw);
}

}  // namespace randwave
