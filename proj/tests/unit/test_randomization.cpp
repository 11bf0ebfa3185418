#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "randwave/core/rng.hpp"
#include "randwave/randomization/data_families.hpp"
#include "randwave/randomization/rademacher.hpp"
#include "randwave/randomization/randomized_data.hpp"
#include "randwave/spectral/norms.hpp"

using namespace randwave;
using std::numbers::pi;

namespace {

double max_amp_diff(const Field& a, const Field& b, double sign = 1.0) {
  const Field x = to_spectral(a);
  const Field y = to_spectral(b);
  double m = 0.0;
  for (std::size_t i = 0; i < x.amplitudes().size(); ++i)
    m = std::max(m, std::abs(x.amplitudes()[i] - sign * y.amplitudes()[i]));
  return m;
}

Field zero(const Grid& g) { return Field::zeros(g, Representation::kSpectral); }

}  // namespace

TEST_CASE("seed derivation separates domains and indices") {
  CHECK(derive_seed(1, seed_domain::kSample, 0) == derive_seed(1, seed_domain::kSample, 0));
  CHECK(derive_seed(1, seed_domain::kSample, 0) != derive_seed(1, seed_domain::kSample, 1));
  CHECK(derive_seed(1, seed_domain::kSample, 0) != derive_seed(1, seed_domain::kRademacher, 0));
  CHECK(derive_seed(1, seed_domain::kSample, 0) != derive_seed(2, seed_domain::kSample, 0));
}

TEST_CASE("Rademacher draws") {
  const std::vector<BlockIndex> blocks{{0, 0}, {1, 0}, {1, -1}, {2, 3}};
  const RademacherDraw a = draw_rademacher(42, blocks);
  const RademacherDraw b = draw_rademacher(42, blocks);
  CHECK(a.epsilon() == b.epsilon());
  CHECK(a.nu() == b.nu());
  for (const auto& k : blocks) {
    CHECK(std::abs(a.sign(k, Channel::kEpsilon)) == 1);
    CHECK(std::abs(a.sign(k, Channel::kNu)) == 1);
  }
  CHECK_THROWS_AS(a.sign({9, 9}), std::out_of_range);
  CHECK_THROWS_AS(draw_rademacher(1, std::span<const BlockIndex>{}), std::invalid_argument);
  CHECK(a.with_sign({1, 0}, Channel::kEpsilon, -1).sign({1, 0}) == -1);
  const RademacherDraw plus = a.with_all_epsilon(1);
  for (const auto& [k, v] : plus.epsilon()) CHECK(v == 1);

  long sum = 0;
  const int count = 100'000;
  for (int i = 0; i < count; ++i) {
    const int v = rademacher_sign(7, {i % 300 - 150, i / 300}, static_cast<Channel>(i % 2));
    CHECK_UNARY(v == 1 || v == -1);
    sum += v;
  }
  CHECK(std::abs(static_cast<double>(sum) / count) <= 0.02);
}

TEST_CASE("all-plus draw reproduces the datum") {
  const Grid g(64, 16 * pi);
  const Field phi0 = gaussian_bump(g, 0.5, 2.0, {8 * pi, 8 * pi});
  auto decomposition = std::make_shared<const BlockDecomposition>(phi0, zero(g));
  const RademacherDraw draw = draw_rademacher(3, decomposition->block_indices()).with_all_epsilon(1);
  const RandomizedData data = randomize(decomposition, draw);
  CHECK(max_amp_diff(data.phi0_rand, phi0) < 1e-10);
  CHECK(lp_norm(data.phi1_rand, 2.0) == 0.0);
  CHECK_FALSE(decomposition->has_velocity());
  for (const auto& b : decomposition->blocks()) {
    CHECK(UnitPartition::is_canonical(b.k));
    CHECK(lp_norm(b.phi1, 2.0) == 0.0);
  }

  // triangle inequality in H^1 for an arbitrary draw
  const RandomizedData random = randomize(decomposition, draw_rademacher(99, decomposition->block_indices()));
  double sum = 0.0;
  for (const auto& b : decomposition->blocks()) sum += sobolev_norm(b.phi0, 1.0);
  CHECK(sobolev_norm(random.phi0_rand, 1.0) <= sum * (1 + 1e-12));
}

TEST_CASE("zero datum has no active blocks") {
  const Grid g(32, 8 * pi);
  const BlockDecomposition d(zero(g), zero(g));
  CHECK(d.blocks().empty());
  const RandomizedData data = randomize(zero(g), zero(g), RademacherDraw(1, {}, {}));
  CHECK(lp_norm(data.phi0_rand, 2.0) == 0.0);
}

TEST_CASE("single interior block flips sign") {
  const Grid g(64, 16 * pi);
  // xi = (2, -1) sits on the plateau of block (2, -1), where psi == 1
  const Field phi0 = lattice_modes(g, {{1.0, 16, -8}});
  auto decomposition = std::make_shared<const BlockDecomposition>(phi0, zero(g));
  REQUIRE(decomposition->blocks().size() == 1);
  const BlockIndex k = decomposition->blocks().front().k;
  CHECK(k == BlockIndex{2, -1});
  const RademacherDraw draw(5, {{k, -1}}, {{k, 1}});
  const RandomizedData data = randomize(decomposition, draw);
  CHECK(max_amp_diff(data.phi0_rand, phi0, -1.0) < 1e-14);
  CHECK(sobolev_norm(data.phi0_rand, 1.0) == doctest::Approx(sobolev_norm(phi0, 1.0)));
}

TEST_CASE("velocity channel uses nu signs") {
  const Grid g(64, 16 * pi);
  const Field phi0 = lattice_modes(g, {{1.0, 8, 0}});
  const Field phi1 = lattice_modes(g, {{2.0, 8, 0}});
  auto decomposition = std::make_shared<const BlockDecomposition>(phi0, phi1);
  CHECK(decomposition->has_velocity());
  const BlockIndex k{1, 0};
  const RandomizedData data = randomize(decomposition, RademacherDraw(1, {{k, 1}}, {{k, -1}}));
  CHECK(max_amp_diff(data.phi0_rand, phi0) < 1e-14);
  CHECK(max_amp_diff(data.phi1_rand, phi1, -1.0) < 1e-14);
  CHECK_THROWS_AS(BlockDecomposition(phi0, zero(Grid(32, 8 * pi))), std::invalid_argument);
  CHECK_THROWS_AS(decomposition->block({5, 5}), std::out_of_range);
}

TEST_CASE("data families") {
  const Grid g(64, 16 * pi);
  const Field gauss = gaussian_bump(g, 0.5, 2.0, {8 * pi, 8 * pi});
  // ||grad (A exp(-r^2 / 2 s^2))||_2 = A sqrt(pi) on the plane
  CHECK(sobolev_norm(gauss, 1.0) == doctest::Approx(0.5 * std::sqrt(pi)).epsilon(1e-8));
  double peak = 0.0;
  for (double v : gauss.samples()) peak = std::max(peak, v);
  CHECK(peak == doctest::Approx(0.5));

  const Field band = bandlimited_random(g, 1.5, 2.0, 1.0, 7, {8 * pi, 8 * pi});
  CHECK(sobolev_norm(band, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  const Field band2 = bandlimited_random(g, 1.5, 2.0, 1.0, 7, {8 * pi, 8 * pi});
  CHECK(max_amp_diff(band, band2) == 0.0);

  const auto modes = parse_modes("1:8:0, 0.5:8:8");
  REQUIRE(modes.size() == 2);
  CHECK(modes[1].amplitude == 0.5);
  CHECK(modes[1].m2 == 8);
  CHECK_THROWS_AS(parse_modes("1:2"), std::invalid_argument);
  CHECK(parse_family("bandlimited") == DataSpec::Family::kBandlimited);
  CHECK_THROWS_AS(parse_family("sawtooth"), std::invalid_argument);

  DataSpec spec;
  spec.family = DataSpec::Family::kModes;
  spec.modes = modes;
  const Field m = make_phi0(g, spec);
  const Field phys = to_physical(m);
  const double x1 = 3 * g.dx(), x2 = 5 * g.dx();
  const double want = std::cos(x1) + 0.5 * std::cos(x1 + x2);
  CHECK(phys.samples()[g.flat(3, 5)] == doctest::Approx(want).epsilon(1e-12));
  CHECK_FALSE(support_radius(spec).has_value());
  spec.family = DataSpec::Family::kGaussian;
  CHECK(*support_radius(spec) == doctest::Approx(10.0));
}
