#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <doctest.h>

#include "randwave/picard/picard.hpp"
#include "randwave/randomization/data_families.hpp"
#include "randwave/trees/tree_constants.hpp"
#include "randwave/trees/tree_terms.hpp"

using namespace randwave;
using std::numbers::pi;

namespace {

// Number of full binary trees by the split recurrence.
long long count_trees(int j) {
  if (j == 1) return 1;
  long long s = 0;
  for (int i = 1; i < j; ++i) s += count_trees(i) * count_trees(j - i);
  return s;
}

Field zero(const Grid& g) { return Field::zeros(g, Representation::kSpectral); }

// Two active sign classes on a 32^2 grid with box 8 pi.
RandomizedData two_block_data(std::uint64_t seed) {
  const Grid g(32, 8 * pi);
  const Field phi0 = lattice_modes(g, {{1.0, 4, 0}, {0.5, 4, 4}});
  auto d = std::make_shared<const BlockDecomposition>(phi0, zero(g));
  return randomize(d, draw_rademacher(seed, d->block_indices()));
}

}  // namespace

TEST_CASE("tree enumeration") {
  for (int j = 1; j <= 12; ++j) {
    const auto trees = enumerate_trees(j);
    CHECK(static_cast<long long>(trees.size()) == count_trees(j));
    CHECK(BigInt(static_cast<unsigned long>(trees.size())) == catalan(static_cast<unsigned>(j - 1)));
    std::set<std::string> distinct;
    for (const auto& t : trees) {
      distinct.insert(t.encoding());
      CHECK(t.leaves() == j);
      CHECK(t.internal_nodes() == j - 1);
      CHECK(BinaryTree::parse(t.encoding()) == t);
    }
    CHECK(distinct.size() == trees.size());
  }
  CHECK(catalan(7) == 429);
  CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_trees(kMaxEnumeratedLeaves + 1), std::invalid_argument);
  CHECK_THROWS_AS(BinaryTree::parse("(.."), std::invalid_argument);
  CHECK_THROWS_AS(BinaryTree::leaf().left(), std::logic_error);
}

TEST_CASE("tree constants on examples") {
  CHECK(c_tau(BinaryTree::parse("((..)(..))")) == 3);
  CHECK(c_tau(BinaryTree::parse("(((..).).)")) == 6);
  CHECK(c_tau(BinaryTree::parse("((..).)")) == 2);
  CHECK(c_tau(BinaryTree::leaf()) == 1);
  CHECK(BinaryTree::parse("(((..).).)").height() == 3);
  CHECK(BinaryTree::parse("((..)(..))").height() == 2);
}

TEST_CASE("iterated time integrals against the power law") {
  for (int j = 1; j <= 7; ++j) {
    for (const auto& tree : enumerate_trees(j)) {
      const double c = c_tau(tree).get_d();
      for (double t : {0.5, 1.0, 2.0}) {
        const double exact = std::pow(t, j - 1) / c;
        CHECK(std::abs(i_tau_oracle(tree, t) - exact) <= 1e-12 * std::max(1.0, exact));
      }
    }
  }
  CHECK_THROWS_AS(i_tau_oracle(BinaryTree::leaf(), 2.5), std::invalid_argument);
  CHECK_THROWS_AS(i_tau_oracle(enumerate_trees(9).front(), 1.0), std::invalid_argument);

  const auto rows = tree_report(1, 5);
  CHECK(rows.size() == 1 + 1 + 2 + 5 + 14);
  for (const auto& r : rows) CHECK(r.residual <= 1e-12);
  std::ostringstream csv;
  write_tree_csv(csv, rows);
  CHECK(csv.str().rfind("encoding,j,c_tau,i_tau_1,residual\n", 0) == 0);
}

TEST_CASE("minimal tree constant") {
  CHECK(c_star(1) == 1);
  CHECK(c_star(2) == 1);
  CHECK(c_star(3) == 2);
  CHECK(c_star(4) == 3);
  for (int j = 1; j <= 10; ++j) {
    BigInt best = -1;
    for (const auto& t : enumerate_trees(j)) {
      const BigInt c = c_tau(t);
      if (best < 0 || c < best) best = c;
    }
    CHECK(c_star(j) == best);
  }
}

TEST_CASE("upper product for complete trees") {
  for (int n = 0; n <= 20; ++n) {
    const CStarUpper u = c_star_upper(n);
    CHECK(u.identity_holds);
    CHECK(u.exponent_sum == (BigInt(1) << (n + 1)) - n - 2);
    if (n > 10) continue;
    BigInt prod = 1;
    for (int k = 1; k <= n; ++k) {
      const BigInt base = (BigInt(1) << k) - 1;
      for (int e = 0; e < (1 << (n - k)); ++e) prod *= base;
    }
    CHECK(u.value == prod);
  }
  // the complete tree of height n has exactly this constant
  for (int n = 1; n <= 3; ++n) {
    BinaryTree t = BinaryTree::leaf();
    for (int h = 0; h < n; ++h) t = BinaryTree::node(t, t);
    CHECK(c_tau(t) == c_star_upper(n).value);
    if ((1 << n) <= kMaxEnumeratedLeaves) CHECK(c_star(1 << n) <= c_star_upper(n).value);
  }
  CHECK_THROWS_AS(c_star_upper(21), std::invalid_argument);
}

TEST_CASE("index sets and level trees") {
  CHECK(b_index_set(2, 1) == std::vector<int>{1});
  CHECK(b_index_set(3, 2) == std::vector<int>{1, 2});
  CHECK(b_index_set(4, 2) == std::vector<int>{2});
  CHECK(b_index_set(5, 3) == std::vector<int>{1, 2, 3, 4});
  CHECK(b_index_set(6, 3) == std::vector<int>{2, 3, 4});
  CHECK(b_index_set(8, 3) == std::vector<int>{4});
  CHECK_THROWS_AS(b_index_set(5, 2), std::invalid_argument);
  for (int n = 0; n <= 3; ++n) {
    for (int j = 1; j <= 8; ++j) {
      std::vector<std::string> want;
      for (const auto& t : enumerate_trees(j))
        if (t.height() <= n) want.push_back(t.encoding());
      std::vector<std::string> got;
      for (const auto& t : level_trees(n, j)) got.push_back(t.encoding());
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("tree terms against direct evaluation") {
  const RandomizedData data = two_block_data(3);
  const Grid& g = data.decomposition->grid();
  const TimeGrid tg(0.5, 32);
  auto ops = std::make_shared<const WaveOperators>(g, tg);
  TreeTermEvaluator eval(ops, data.decomposition, Deriv::kX1);
  const auto blocks = data.decomposition->block_indices();
  REQUIRE(blocks.size() == 2);

  std::vector<Field> leaf;
  for (int m = 0; m < tg.nodes(); ++m) {
    const Field w = apply_multiplier(data.decomposition->block(blocks[0]).phi0,
                                     MultiplierKind::cos_halfwave(tg.time(m)));
    leaf.push_back(apply_multiplier(w, MultiplierKind::spatial_derivative(1)));
  }
  const FieldSeries leaf_series(tg, leaf, "leaf");
  CHECK(relative_sup_l2_discrepancy(eval.leaf(blocks[0]), leaf_series) <= 1e-10);

  const std::vector<BlockIndex> pair{blocks[0], blocks[1]};
  const FieldSeries product = dealiased_product(*ops, eval.leaf(blocks[0]), eval.leaf(blocks[1]), "p");
  const FieldSeries direct = duhamel(*ops, product, DuhamelKernel::kDx1, "direct");
  const FieldSeries term = eval.evaluate(BinaryTree::parse("(..)"), pair);
  CHECK(relative_sup_l2_discrepancy(term, direct) <= 1e-10);

  CHECK_THROWS_AS(eval.evaluate(BinaryTree::parse("(..)"), std::vector<BlockIndex>{blocks[0]}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval.leaf(BlockIndex{40, 40}), std::out_of_range);
}

TEST_CASE("tree reconstruction reproduces direct iteration") {
  const TimeGrid tg(0.5, 32);
  for (std::uint64_t seed : {1u, 2u}) {
    const RandomizedData data = two_block_data(seed);
    for (int n = 0; n <= 2; ++n) {
      const FieldSeries tree = reconstruct_iterate(n, data, tg);
      const IterateRecord direct = picard_iterate(n, data, tg);
      const double err = relative_sup_l2_discrepancy(tree, direct.d_u);
      CHECK(err <= 1e-10);
    }
  }
  CHECK_THROWS_AS(reconstruct_iterate(3, two_block_data(1), tg), std::length_error);

  const Grid g(32, 8 * pi);
  const Field velocity = lattice_modes(g, {{1.0, 4, 0}});
  auto d = std::make_shared<const BlockDecomposition>(velocity, velocity);
  const RandomizedData with_velocity = randomize(d, draw_rademacher(1, d->block_indices()));
  CHECK_THROWS(reconstruct_iterate(1, with_velocity, tg));
}

TEST_CASE("integrand bound study") {
  const Grid g(32, 8 * pi);
  const Field phi0 = gaussian_bump(g, 0.5, 1.5, {4 * pi, 4 * pi});
  const BlockDecomposition d(phi0, zero(g));
  const GTildeStudy study = gtilde_bound_study(d, Deriv::kX1, 0.5, 3, 3, 9);
  CHECK(study.samples.size() == (1 + 2) * 3);
  CHECK(study.rigorous_ok);
  CHECK(study.measured_c > 0.0);
  CHECK(std::isfinite(study.measured_c));
  CHECK(bernstein_factor(g, 1) == doctest::Approx(std::sqrt(0.25) / std::sqrt(2 * pi)));
}
