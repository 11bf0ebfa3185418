#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <doctest.h>

#include "randwave/experiment/config.hpp"
#include "randwave/experiment/report.hpp"
#include "randwave/experiment/runner.hpp"
#include "randwave/experiment/statistics.hpp"

using namespace randwave;
using std::numbers::pi;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n_points = 32;
  c.box_length = 8 * pi;
  c.T = 0.25;
  c.n_steps = 8;
  c.n_max = 2;
  c.samples = 8;
  c.bootstrap = 50;
  c.data.sigma = 1.5;
  c.output_dir = std::filesystem::temp_directory_path() / "randwave_test";
  return c;
}

std::string rows_text(const ExperimentReport& r) {
  std::ostringstream out;
  write_rows_csv(out, r);
  return out.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("config parsing") {
  std::istringstream in(R"([grid]
n_points = 64
box_length = 4pi
[time]
T = 0.3
n_steps = 12
[iterates]
deriv = x2
[data]
family = modes
modes = 1:4:0, 0.5:4:4
[moments]
p_list = 4, 8
[scaling]
intervals = 0.4, 0.2, 0.1, 0.05
)");
  const ExperimentConfig c = parse_config(in);
  CHECK(c.n_points == 64);
  CHECK(c.box_length == doctest::Approx(4 * pi).epsilon(1e-15));
  CHECK(c.T == 0.3);
  CHECK(c.deriv == Deriv::kX2);
  CHECK(c.data.family == DataSpec::Family::kModes);
  REQUIRE(c.data.modes.size() == 2);
  CHECK(c.p_list == std::vector<int>{4, 8});
  CHECK(c.samples == ExperimentConfig{}.samples);
  CHECK_NOTHROW(validate_static(c));

  CHECK(parse_length("16pi") == doctest::Approx(16 * pi));
  CHECK(parse_length("16*pi") == doctest::Approx(16 * pi));
  CHECK(parse_length("12.5") == 12.5);
  CHECK_THROWS_AS(parse_length("pie"), std::invalid_argument);

  std::istringstream unknown("[grid]\nn_pionts = 64\n");
  try {
    parse_config(unknown);
    FAIL("unknown key accepted");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("grid.n_pionts") != std::string::npos);
  }
  std::istringstream bad("[time]\nT = fast\n");
  CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);

  ExperimentConfig other = small_config();
  const std::string h = other.hash();
  other.output_dir = "elsewhere";
  CHECK(other.hash() == h);
  other.samples += 1;
  CHECK(other.hash() != h);
}

TEST_CASE("static validation") {
  ExperimentConfig c = small_config();
  CHECK_NOTHROW(validate_static(c));
  c.samples = 0;
  CHECK_THROWS_AS(validate_static(c), std::invalid_argument);
  CHECK_THROWS_AS(run_experiment(c, 1), std::invalid_argument);
  c = small_config();
  c.interval_list = {0.8, 0.5, 0.2, 0.1};
  CHECK_THROWS_AS(validate_static(c), std::invalid_argument);
  c = small_config();
  c.data.sigma = 2.4;  // 5 sigma support leaves 0.57 of clearance
  c.interval_list = {0.8, 0.4, 0.2, 0.1};
  REQUIRE(support_clearance(c).has_value());
  CHECK(*support_clearance(c) == doctest::Approx(4 * pi - 12.0));
  CHECK_THROWS_AS(validate_static(c), std::invalid_argument);
  c.data.family = DataSpec::Family::kModes;
  c.data.modes = {{1.0, 4, 0}};
  CHECK_FALSE(support_clearance(c).has_value());
}

TEST_CASE("small regime enforcement") {
  ExperimentConfig c = small_config();
  c.data.amplitude = 40.0;
  CHECK_THROWS_AS(run_experiment(c, 1), std::invalid_argument);
  c.enforce_small_regime = false;
  c.samples = 2;
  const ExperimentReport r = run_experiment(c, 1);
  CHECK(r.calibration.regime_product >= 0.5);
}

TEST_CASE("statistics helpers") {
  const std::vector<double> v{3.0, 1.0, 4.0, 1.0, 5.0};
  CHECK(median(v) == 3.0);
  CHECK(mean(v) == doctest::Approx(2.8));
  CHECK(quantile(v, 0.25) == 1.0);
  CHECK(quantile(v, 0.9) == doctest::Approx(4.6));
  CHECK(quantile(v, 0.0) == 1.0);
  CHECK(quantile(v, 1.0) == 5.0);
  CHECK(plugin_moment(v, 2.0) == doctest::Approx(std::sqrt(52.0 / 5.0)));
  const Interval ci = bootstrap_moment_ci(v, 4.0, 400, 1);
  CHECK(ci.lower <= plugin_moment(v, 4.0));
  CHECK(ci.upper >= plugin_moment(v, 4.0));
  CHECK(ci.upper <= 5.0);
  const Interval again = bootstrap_moment_ci(v, 4.0, 400, 1);
  CHECK(again.lower == ci.lower);
  CHECK(again.upper == ci.upper);

  const std::vector<double> x{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> y{1.0, 3.0, 5.0, 7.0};
  const LineFit fit = least_squares(x, y);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK_THROWS_AS(least_squares(std::vector<double>{1.0}, std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(quantile(std::vector<double>{}, 0.5), std::invalid_argument);
}

TEST_CASE("zero datum gives zero iterates") {
  ExperimentConfig c = small_config();
  c.data.amplitude = 0.0;
  const ExperimentReport r = run_experiment(c, 2);
  CHECK(r.rows.size() == 8 * 3);
  for (const auto& row : r.rows) {
    CHECK(row.finite);
    CHECK(row.l2t_l4x == 0.0);
    CHECK(row.h1_sup == 0.0);
  }
  CHECK(r.calibration.c_cal == 0.0);
  CHECK(r.all_pass());
}

TEST_CASE("reports are independent of the worker count") {
  const ExperimentConfig c = small_config();
  const ExperimentReport one = run_experiment(c, 1);
  const ExperimentReport three = run_experiment(c, 3);
  CHECK(rows_text(one) == rows_text(three));
  CHECK(summary_json(one).dump() == summary_json(three).dump());
  CHECK(one.all_pass());
  for (const auto& m : one.moments) CHECK(m.ratio < 1.0);
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    if (one.rows[i].n == 0) {
      CHECK(std::isnan(one.rows[i].energy_constant));
    } else {
      CHECK(one.rows[i].energy_constant >= 0.0);
    }
  }
}

TEST_CASE("emitted report round-trips") {
  const ExperimentConfig c = small_config();
  const ExperimentReport r = run_experiment(c, 2);
  const auto dir = c.output_dir / "emit";
  std::filesystem::remove_all(dir);
  emit_report(r, dir);
  const std::string rows = slurp(dir / "rows.csv");
  CHECK(rows == rows_text(r));
  CHECK(rows.rfind("sample,seed,n,finite,linf_h1,linf_l2_dt,l2t_l4x,energy_constant\n", 0) == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(j == summary_json(r));
  CHECK(j["config_hash"] == c.hash());
  CHECK(j["version"] == kCodeVersion);
  CHECK(j["seeds"]["samples"].size() == 8);
  CHECK(j["seeds"]["samples"][3].get<std::uint64_t>() == r.sample_seeds[3]);
  CHECK(j["calibration"]["c_cal"].get<double>() == r.calibration.c_cal);
  std::filesystem::remove_all(dir);

  ExperimentReport empty = r;
  empty.rows.clear();
  CHECK_THROWS_AS(emit_report(empty, dir), std::invalid_argument);
}

TEST_CASE("moment bound formula") {
  Calibration cal;
  cal.c_cal = 0.2;
  cal.phi0_h1 = 0.9;
  cal.T = 0.25;
  CHECK(moment_bound(cal, 0, 4.0) == doctest::Approx(0.2 * 2.0 * 0.9 * 0.5));
  CHECK(moment_bound(cal, 2, 6.0) == doctest::Approx(0.2 * 36.0 * 0.9 * 0.5 * 24.0));
}
