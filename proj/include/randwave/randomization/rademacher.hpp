#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "randwave/spectral/partition.hpp"

namespace randwave {

/// Which initial datum a sign multiplies: epsilon_k for phi0, nu_k for phi1.
enum class Channel : std::uint8_t { kEpsilon = 0, kNu = 1 };

/// Independent +-1 signs per (block, channel), generated counter-style from the
/// seed so that any subset of blocks can be drawn reproducibly.
class RademacherDraw {
 public:
  RademacherDraw(std::uint64_t seed, std::map<BlockIndex, int> epsilon,
                 std::map<BlockIndex, int> nu)
      : seed_(seed), epsilon_(std::move(epsilon)), nu_(std::move(nu)) {}

  std::uint64_t seed() const { return seed_; }
  /// Throws std::out_of_range for a block that was not drawn.
  int sign(const BlockIndex& k, Channel channel = Channel::kEpsilon) const;
  const std::map<BlockIndex, int>& epsilon() const { return epsilon_; }
  const std::map<BlockIndex, int>& nu() const { return nu_; }

  /// Copy with the epsilon sign of every block replaced by `value`.
  RademacherDraw with_all_epsilon(int value) const;
  RademacherDraw with_sign(const BlockIndex& k, Channel channel, int value) const;

 private:
  std::uint64_t seed_;
  std::map<BlockIndex, int> epsilon_;
  std::map<BlockIndex, int> nu_;
};

/// Stateless sign for (seed, block, channel).
int rademacher_sign(std::uint64_t seed, const BlockIndex& k, Channel channel);

/// Throws std::invalid_argument for an empty block set.
RademacherDraw draw_rademacher(std::uint64_t seed, std::span<const BlockIndex> blocks);

}  // namespace randwave
