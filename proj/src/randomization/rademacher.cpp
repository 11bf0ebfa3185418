#include "randwave/randomization/rademacher.hpp"

#include <stdexcept>

#include "randwave/core/rng.hpp"

namespace randwave {

int rademacher_sign(std::uint64_t seed, const BlockIndex& k, Channel channel) {
  const auto a = static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.k1 + (1 << 20)));
  const auto b = static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.k2 + (1 << 20)));
  const std::uint64_t counter = (a << 43) | (b << 2) | static_cast<std::uint64_t>(channel);
  const std::uint64_t bits = derive_seed(seed, seed_domain::kRademacher, counter);
  return (bits >> 63) != 0 ? 1 : -1;
}

int RademacherDraw::sign(const BlockIndex& k, Channel channel) const {
  const auto& table = channel == Channel::kEpsilon ? epsilon_ : nu_;
  auto it = table.find(k);
  if (it == table.end()) throw std::out_of_range("block not present in Rademacher draw");
  return it->second;
}

RademacherDraw RademacherDraw::with_all_epsilon(int value) const {
  auto eps = epsilon_;
  for (auto& [k, v] : eps) v = value;
  return {seed_, std::move(eps), nu_};
}

RademacherDraw RademacherDraw::with_sign(const BlockIndex& k, Channel channel, int value) const {
  auto eps = epsilon_;
  auto nu = nu_;
  (channel == Channel::kEpsilon ? eps : nu)[k] = value;
  return {seed_, std::move(eps), std::move(nu)};
}

RademacherDraw draw_rademacher(std::uint64_t seed, std::span<const BlockIndex> blocks) {
  if (blocks.empty()) throw std::invalid_argument("Rademacher draw needs at least one block");
  std::map<BlockIndex, int> eps;
  std::map<BlockIndex, int> nu;
  for (const auto& k : blocks) {
    eps[k] = rademacher_sign(seed, k, Channel::kEpsilon);
    nu[k] = rademacher_sign(seed, k, Channel::kNu);
  }
  return {seed, std::move(eps), std::move(nu)};
}

}  // namespace randwave
