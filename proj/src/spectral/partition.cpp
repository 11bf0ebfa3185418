#include "randwave/spectral/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randwave {

namespace {
double smoothstep5(double y) { return y * y * y * (10.0 + y * (-15.0 + 6.0 * y)); }
}  // namespace

double partition_bump(double x) {
  const double a = std::abs(x);
  if (a <= kBumpPlateau) return 1.0;
  if (a >= kBumpSupport) return 0.0;
  return smoothstep5((kBumpSupport - a) / (kBumpSupport - kBumpPlateau));
}

UnitPartition::UnitPartition(const Grid& grid) : grid_(grid) {
  const double xi_max = grid.frequency_spacing() * (grid.n() / 2);
  max_block_ = static_cast<int>(std::ceil(xi_max + kBumpSupport));
}

bool UnitPartition::contains(const BlockIndex& k) const {
  return std::abs(k.k1) <= max_block_ && std::abs(k.k2) <= max_block_;
}

std::vector<BlockIndex> UnitPartition::blocks() const {
  std::vector<BlockIndex> out;
  for (int a = -max_block_; a <= max_block_; ++a)
    for (int b = -max_block_; b <= max_block_; ++b) out.push_back({a, b});
  return out;
}

bool UnitPartition::is_canonical(const BlockIndex& k) {
  return k.k1 > 0 || (k.k1 == 0 && k.k2 >= 0);
}

std::vector<BlockIndex> UnitPartition::paired_blocks() const {
  std::vector<BlockIndex> out;
  for (const auto& k : blocks())
    if (is_canonical(k)) out.push_back(k);
  return out;
}

double UnitPartition::weight(const BlockIndex& k, int i1, int i2) const {
  return partition_bump(grid_.frequency(i1) - k.k1) * partition_bump(grid_.frequency(i2) - k.k2);
}

Field unit_projection(const Field& field, const BlockIndex& k) {
  const Field spec = to_spectral(field);
  const Grid& grid = spec.grid();
  const UnitPartition partition(grid);
  if (!partition.contains(k)) throw std::out_of_range("block index outside the grid's partition");
  auto a = spec.amplitudes();
  std::vector<Complex> out(grid.size());
  for (int i1 = 0; i1 < grid.n(); ++i1) {
    const double w1 = partition_bump(grid.frequency(i1) - k.k1);
    if (w1 == 0.0) continue;
    for (int i2 = 0; i2 < grid.n(); ++i2) {
      const std::size_t idx = grid.flat(i1, i2);
      out[idx] = a[idx] * (w1 * partition_bump(grid.frequency(i2) - k.k2));
    }
  }
  return Field::spectral(grid, std::move(out));
}

Field paired_projection(const Field& field, const BlockIndex& k) {
  Field p = unit_projection(field, k);
  if (k == BlockIndex{0, 0}) return p;
  Field q = unit_projection(field, -k);
  auto a = p.amplitudes();
  auto b = q.amplitudes();
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Field::spectral(field.grid(), std::move(out));
}

double partition_of_unity_defect(const UnitPartition& partition) {
  const Grid& grid = partition.grid();
  const auto blocks = partition.blocks();
  double worst = 0.0;
  for (int i1 = 0; i1 < grid.n(); ++i1) {
    for (int i2 = 0; i2 < grid.n(); ++i2) {
      double sum = 0.0;
      for (const auto& k : blocks) sum += partition.weight(k, i1, i2);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  }
  return worst;
}

}  // namespace randwave
