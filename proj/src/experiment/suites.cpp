#include "randwave/experiment/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "randwave/core/rng.hpp"
#include "randwave/moments/combinatorics.hpp"
#include "randwave/moments/khinchine.hpp"
#include "randwave/moments/tail.hpp"
#include "randwave/trees/tree_terms.hpp"

namespace randwave {
namespace {

Verdict count_verdict(const std::string& op, const std::string& params, int failures) {
  return {op, params, static_cast<double>(failures), 0.0, failures == 0};
}

}  // namespace

TreeSuiteResult run_tree_suite(const ExperimentConfig& config) {
  TreeSuiteResult out;
  out.rows = tree_report(1, 7);
  double worst = 0.0;
  for (const auto& r : out.rows) worst = std::max(worst, r.residual);
  out.verdicts.push_back({"tree_closed_form", "j<=7 trees=" + std::to_string(out.rows.size()), worst,
                          1e-9, worst <= 1e-9 && out.rows.size() == 197});

  int bad = 0;
  for (int j = 1; j <= 12; ++j) {
    if (BigInt(static_cast<unsigned long>(enumerate_trees(j).size())) != catalan(static_cast<unsigned>(j - 1))) ++bad;
  }
  out.verdicts.push_back(count_verdict("tree_counts", "j<=12", bad));

  bad = 0;
  for (int n = 1; n <= 3; ++n) {
    if (c_star(1 << n) > c_star_upper(n).value) ++bad;
  }
  out.verdicts.push_back(count_verdict("c_star_upper", "n<=3", bad));
  bad = 0;
  for (int n = 0; n <= 20; ++n) bad += c_star_upper(n).identity_holds ? 0 : 1;
  out.verdicts.push_back(count_verdict("exponent_identity", "n<=20", bad));

  bad = 0;
  for (int n = 0; n <= 3; ++n) {
    for (int j = 1; j <= (1 << n); ++j) {
      const auto level = level_trees(n, j);
      std::size_t expected = 0;
      if (j <= kMaxEnumeratedLeaves) {
        for (const auto& t : enumerate_trees(j)) expected += t.height() <= n ? 1 : 0;
      }
      if (level.size() != expected) ++bad;
    }
  }
  out.verdicts.push_back(count_verdict("level_trees_height", "n<=3", bad));

  const Grid grid(config.n_points, config.box_length);
  const Field phi0 = make_phi0(grid, config.data);
  const BlockDecomposition decomposition(phi0, Field::zeros(grid, Representation::kSpectral));
  if (!decomposition.blocks().empty()) {
    const GTildeStudy study = gtilde_bound_study(decomposition, config.deriv, config.T, 4, 4,
                                                 config.base_seed);
    double worst = 0.0;
    for (const auto& s : study.samples)
      if (s.rigorous_bound > 0.0) worst = std::max(worst, s.norm_l4 / s.rigorous_bound);
    out.verdicts.push_back({"gtilde_rigorous_bound", "j<=4 C=" + format_double(study.measured_c), worst,
                            1.0, study.rigorous_ok});
  }
  return out;
}

std::vector<Verdict> run_moment_suite(std::uint64_t seed) {
  std::vector<Verdict> out;
  std::mt19937_64 rng(derive_seed(seed, seed_domain::kCoefficients, 1));
  std::normal_distribution<double> normal;

  double worst = 0.0;
  for (int K = 1; K <= 10; ++K) {
    std::vector<double> c(static_cast<std::size_t>(K));
    for (auto& v : c) v = normal(rng);
    for (int p : {2, 4, 6, 8}) {
      const double a = enumerated_moment(c, p);
      const double b = multinomial_moment(c, p);
      worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
    }
  }
  out.push_back({"moment_identity", "K<=10 p=2,4,6,8", worst, 1e-12, worst <= 1e-12});
  const std::vector<double> two{1.0, 1.0};
  const std::vector<double> three{1.0, 1.0, 1.0};
  out.push_back({"exact_moment", "c=(1,1) p=4", exact_moment(two, 4), 8.0, exact_moment(two, 4) == 8.0});
  out.push_back({"exact_moment", "c=(1,1,1) p=4", exact_moment(three, 4), 21.0, exact_moment(three, 4) == 21.0});

  double max_ratio = 0.0;
  for (int s = 0; s < 200; ++s) {
    std::uniform_int_distribution<int> size(1, 12);
    std::vector<double> c(static_cast<std::size_t>(size(rng)));
    for (auto& v : c) v = normal(rng);
    for (int p = 2; p <= 12; p += 2) max_ratio = std::max(max_ratio, khinchine_ratio(c, p).ratio);
  }
  out.push_back({"khinchine_ratio", "200 vectors, even p<=12", max_ratio, 1.0, max_ratio <= 1.0});

  const DecoupledCheck dec = decoupled_moment_check(
      [](std::mt19937_64& g, int) { return std::uniform_real_distribution<double>(0.0, 1.0)(g); }, 8, 4,
      100'000, seed);
  out.push_back({"decoupled_moment", "uniform K=8 p=4 trials=1e5", dec.constant, 1.2, dec.constant <= 1.2});
  out.push_back(count_verdict("normconstant_factor", "j<=10, 1000 multi-indices",
                              normconstant_violations(10, 1000, seed)));

  out.push_back({"stirling2", "S(4,2)", stirling2(4, 2).get_d(), 7.0, stirling2(4, 2) == 7});
  int bad = 0;
  for (int N = 1; N <= 20; ++N) {
    for (int r = 1; r <= N; ++r) {
      const SurjectionCount s = surjection_count(N, r);
      bad += (s.total_bound && s.refined_bound) ? 0 : 1;
    }
  }
  out.push_back(count_verdict("surjection_bounds", "r<=N<=20", bad));
  bad = 0;
  for (int j = 2; j <= 20; ++j)
    for (int r = 1; r < j; ++r) bad += stirling_refined_bound_check(j, r).pass() ? 0 : 1;
  out.push_back(count_verdict("stirling_refined_bound", "1<=r<j<=20", bad));

  bad = 0;
  for (int j = 1; j <= 12; ++j) {
    std::vector<BigInt> per_r(static_cast<std::size_t>(j) + 1, 0);
    for (const auto& pc : partition_classes(j)) per_r[static_cast<std::size_t>(pc.r)] += pc.count;
    BigInt total = 0;
    for (int r = 1; r <= j; ++r) {
      if (per_r[static_cast<std::size_t>(r)] != stirling2(j, r)) ++bad;
      total += per_r[static_cast<std::size_t>(r)];
    }
    if (total != bell_number(j)) ++bad;
  }
  out.push_back(count_verdict("partition_classes", "j<=12", bad));

  const MomentBound mb{1.0, 1.0, 1.0, 1.0, 4.0};
  const TailBound tb = tail_from_moments(mb, 4.0 * std::exp(1.0));
  out.push_back({"tail_from_moments", "k=1 C=1 N=1 lambda=4e", tb.p_star, 16.0,
                 std::abs(tb.p_star - 16.0) < 1e-12 && tb.value >= tb.chebyshev});
  return out;
}

}  // namespace randwave
