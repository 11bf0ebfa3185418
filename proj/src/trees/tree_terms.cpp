#include "randwave/trees/tree_terms.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "randwave/core/rng.hpp"
#include "randwave/spectral/norms.hpp"
#include "randwave/spectral/partition.hpp"
#include "randwave/trees/tree_constants.hpp"

namespace randwave {
namespace {

std::string memo_key(const BinaryTree& tree, std::span<const BlockIndex> blocks) {
  std::string key = tree.encoding();
  for (const auto& k : blocks) key += "|" + std::to_string(k.k1) + "," + std::to_string(k.k2);
  return key;
}

// d W(t) applied to a spectral datum with zero velocity, at one time.
Field free_derivative(const Field& phi, double t, Deriv deriv) {
  if (deriv == Deriv::kTime) return apply_multiplier(phi, MultiplierKind::halfwave_velocity(t));
  const Field c = apply_multiplier(phi, MultiplierKind::cos_halfwave(t));
  return apply_multiplier(c, spatial_derivative_of(deriv));
}

void require_no_velocity(const BlockDecomposition& d) {
  if (d.has_velocity()) throw std::invalid_argument("tree expansion requires zero initial velocity");
}

}  // namespace

TreeTermEvaluator::TreeTermEvaluator(std::shared_ptr<const WaveOperators> ops,
                                     std::shared_ptr<const BlockDecomposition> decomposition,
                                     Deriv deriv)
    : ops_(std::move(ops)), decomposition_(std::move(decomposition)), deriv_(deriv) {
  if (!ops_ || !decomposition_) throw std::invalid_argument("tree evaluator needs operators and data");
  if (!(ops_->grid() == decomposition_->grid())) throw std::invalid_argument("data grid does not match operators");
  require_no_velocity(*decomposition_);
}

const FieldSeries& TreeTermEvaluator::leaf(const BlockIndex& k) {
  auto it = leaves_.find(k);
  if (it != leaves_.end()) return it->second;
  const Field& p = decomposition_->block(k).phi0;
  const TimeGrid& tg = ops_->time_grid();
  std::vector<Field> out;
  out.reserve(static_cast<std::size_t>(tg.nodes()));
  for (int m = 0; m < tg.nodes(); ++m) out.push_back(free_derivative(p, tg.time(m), deriv_));
  return leaves_.emplace(k, FieldSeries(tg, std::move(out), "F")).first->second;
}

FieldSeries TreeTermEvaluator::combine_children(const BinaryTree& tree,
                                                std::span<const BlockIndex> blocks) {
  const auto i = static_cast<std::size_t>(tree.left().leaves());
  const FieldSeries& a = subtree(tree.left(), blocks.first(i));
  const FieldSeries& b = subtree(tree.right(), blocks.subspan(i));
  const FieldSeries prod = dealiased_product(*ops_, a, b, "source");
  return duhamel(*ops_, prod, m01_kernel(deriv_), "G");
}

const FieldSeries& TreeTermEvaluator::subtree(const BinaryTree& tree,
                                              std::span<const BlockIndex> blocks) {
  if (tree.is_leaf()) return leaf(blocks.front());
  const std::string key = memo_key(tree, blocks);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  FieldSeries s = combine_children(tree, blocks);
  return memo_.emplace(key, std::move(s)).first->second;
}

FieldSeries TreeTermEvaluator::evaluate(const BinaryTree& tree,
                                        std::span<const BlockIndex> blocks) {
  if (static_cast<int>(blocks.size()) != tree.leaves()) {
    throw std::invalid_argument("block tuple length must equal the leaf count");
  }
  if (tree.is_leaf()) return leaf(blocks.front());
  return combine_children(tree, blocks);
}

FieldSeries evaluate_tree_term(const BinaryTree& tree, std::span<const BlockIndex> blocks,
                               const RandomizedData& data, const TimeGrid& time_grid,
                               Deriv deriv) {
  TreeTermEvaluator ev(std::make_shared<const WaveOperators>(data.grid(), time_grid),
                       data.decomposition, deriv);
  return ev.evaluate(tree, blocks);
}

FieldSeries reconstruct_iterate(int n, const RandomizedData& data, const TimeGrid& time_grid,
                                Deriv deriv) {
  if (n < 0) throw std::invalid_argument("iterate order must be nonnegative");
  if (n > kMaxReconstructOrder) throw std::length_error("tree reconstruction supports n <= 2");
  const std::vector<BlockIndex> blocks = data.decomposition->block_indices();
  if (static_cast<int>(blocks.size()) > kMaxReconstructBlocks) {
    throw std::length_error("tree reconstruction supports at most 6 active blocks");
  }
  TreeTermEvaluator ev(std::make_shared<const WaveOperators>(data.grid(), time_grid),
                       data.decomposition, deriv);
  const std::size_t size = data.grid().size();
  std::vector<std::vector<Complex>> acc(static_cast<std::size_t>(time_grid.nodes()),
                                        std::vector<Complex>(size));
  const int nb = static_cast<int>(blocks.size());
  for (int j = 1; j <= (1 << n); ++j) {
    const std::vector<BinaryTree> trees = level_trees(n, j);
    std::vector<int> digits(static_cast<std::size_t>(j), 0);
    std::vector<BlockIndex> tuple(static_cast<std::size_t>(j));
    while (true) {
      int sign = 1;
      for (int q = 0; q < j; ++q) {
        tuple[static_cast<std::size_t>(q)] = blocks[static_cast<std::size_t>(digits[static_cast<std::size_t>(q)])];
        sign *= data.draw.sign(tuple[static_cast<std::size_t>(q)], Channel::kEpsilon);
      }
      for (const auto& tree : trees) {
        const FieldSeries g = ev.evaluate(tree, tuple);
        for (int m = 0; m < time_grid.nodes(); ++m) {
          const Field s = to_spectral(g.at(m));
          auto a = s.amplitudes();
          auto& out = acc[static_cast<std::size_t>(m)];
          for (std::size_t i = 0; i < size; ++i) out[i] += static_cast<double>(sign) * a[i];
        }
      }
      int q = j - 1;
      while (q >= 0 && ++digits[static_cast<std::size_t>(q)] == nb) digits[static_cast<std::size_t>(q--)] = 0;
      if (q < 0) break;
    }
  }
  std::vector<Field> fields;
  fields.reserve(acc.size());
  for (auto& v : acc) fields.push_back(Field::spectral(data.grid(), std::move(v)));
  return {time_grid, std::move(fields), "d_u"};
}

double bernstein_factor(const Grid& grid, std::size_t support_points) {
  const double dxi = grid.frequency_spacing();
  return std::pow(static_cast<double>(support_points) * dxi * dxi, 0.25) /
         std::sqrt(2.0 * std::numbers::pi);
}

namespace {

struct GTildeContext {
  const BlockDecomposition& decomposition;
  const WaveOperators& ops;
  Deriv deriv;
  double node_bernstein;
  std::map<BlockIndex, double> leaf_bound;  // Bernstein(S_k) ||P_k phi0||_{H^1}
  std::mt19937_64 rng;
};

std::size_t block_support(const UnitPartition& partition, const BlockIndex& k) {
  const Grid& g = partition.grid();
  std::size_t count = 0;
  for (int i1 = 0; i1 < g.n(); ++i1)
    for (int i2 = 0; i2 < g.n(); ++i2)
      if (partition.weight(k, i1, i2) > 0.0 || partition.weight(-k, i1, i2) > 0.0) ++count;
  return count;
}

// Integrand at output time t: leaves read F_k at the parent's node time.
Field gtilde(const BinaryTree& tree, std::span<const BlockIndex> blocks, double t,
             GTildeContext& ctx, double& bound) {
  if (tree.is_leaf()) {
    bound = ctx.leaf_bound.at(blocks.front());
    return free_derivative(ctx.decomposition.block(blocks.front()).phi0, t, ctx.deriv);
  }
  std::uniform_real_distribution<double> u(0.0, t);
  const double s = t > 0.0 ? u(ctx.rng) : 0.0;
  const auto i = static_cast<std::size_t>(tree.left().leaves());
  double ba = 0.0;
  double bb = 0.0;
  const Field a = gtilde(tree.left(), blocks.first(i), s, ctx, ba);
  const Field b = gtilde(tree.right(), blocks.subspan(i), s, ctx, bb);
  bound = ctx.node_bernstein * ba * bb;
  return apply_multiplier(dealiased_product(ctx.ops, a, b), MultiplierKind::m01(t - s, ctx.deriv));
}

}  // namespace

GTildeStudy gtilde_bound_study(const BlockDecomposition& decomposition, Deriv deriv, double T,
                               int j_max, int samples_per_tree, std::uint64_t seed) {
  if (j_max < 2 || j_max > 4) throw std::invalid_argument("G~ study supports 2 <= j_max <= 4");
  if (samples_per_tree < 1) throw std::invalid_argument("G~ study needs at least one sample");
  require_no_velocity(decomposition);
  const std::vector<BlockIndex> blocks = decomposition.block_indices();
  if (blocks.empty()) throw std::invalid_argument("G~ study needs an active block");
  const Grid& grid = decomposition.grid();
  const WaveOperators ops(grid, TimeGrid(T, 1));
  std::size_t mask_points = 0;
  for (double m : ops.dealias_mask()) mask_points += m > 0.0 ? 1 : 0;

  GTildeContext ctx{decomposition, ops, deriv, bernstein_factor(grid, mask_points), {},
                    std::mt19937_64(derive_seed(seed, seed_domain::kCoefficients, 0))};
  const UnitPartition partition(grid);
  std::map<BlockIndex, double> h1;
  for (const auto& k : blocks) {
    h1[k] = sobolev_norm(decomposition.block(k).phi0, 1.0);
    ctx.leaf_bound[k] = bernstein_factor(grid, block_support(partition, k)) * h1[k];
  }

  GTildeStudy study;
  std::uniform_real_distribution<double> time(0.0, T);
  std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
  for (int j = 2; j <= j_max; ++j) {
    for (const auto& tree : enumerate_trees(j)) {
      const double sqrt_c = std::sqrt(c_tau(tree).get_d());
      for (int s = 0; s < samples_per_tree; ++s) {
        GTildeSample sample;
        sample.encoding = tree.encoding();
        double prod = 1.0;
        for (int q = 0; q < j; ++q) {
          sample.blocks.push_back(blocks[pick(ctx.rng)]);
          prod *= h1.at(sample.blocks.back());
        }
        const double t = time(ctx.rng);
        const Field g = gtilde(tree, sample.blocks, t, ctx, sample.rigorous_bound);
        sample.norm_l4 = lp_norm(g, 4.0);
        sample.scale = sqrt_c * prod;
        sample.measured_c = sample.scale > 0.0
                                ? std::pow(sample.norm_l4 / sample.scale, 2.0 / (j - 1))
                                : 0.0;
        study.measured_c = std::max(study.measured_c, sample.measured_c);
        if (sample.norm_l4 > sample.rigorous_bound * (1.0 + 1e-12)) study.rigorous_ok = false;
        study.samples.push_back(std::move(sample));
      }
    }
  }
  return study;
}

}  // namespace randwave
