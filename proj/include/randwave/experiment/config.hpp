#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "randwave/randomization/data_families.hpp"
#include "randwave/spectral/multiplier.hpp"

namespace randwave {

struct ExperimentConfig {
  // [grid]
  int n_points = 128;
  double box_length = 16.0 * 3.14159265358979323846;
  // [time]
  double T = 0.5;
  int n_steps = 64;
  // [iterates]
  int n_max = 3;
  Deriv deriv = Deriv::kX1;
  // [sampling]
  int samples = 64;
  std::uint64_t base_seed = 20240611;
  int bootstrap = 200;
  bool enforce_small_regime = true;
  // [data]
  DataSpec data;
  // [moments]
  std::vector<int> p_list{4, 6, 8};
  int tail_order = 1;
  int tail_points = 24;
  // [scaling]
  std::vector<double> interval_list{0.8, 0.4, 0.2, 0.1};
  // [output]
  std::filesystem::path output_dir = "out";
  bool partial = false;

  nlohmann::json to_json() const;
  /// 16 hex digits of FNV-1a over the canonical JSON dump.
  std::string hash() const;
};

/// Parses "12.5", "16pi" or "16*pi" style lengths.
double parse_length(const std::string& text);

/// INI text with the sections of ExperimentConfig; unknown keys are errors.
/// Throws std::invalid_argument with the offending key.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Static checks: positive sizes, p_list entries >= 2, halving interval list,
/// and T below the distance from the data support to the box boundary.
/// Throws std::invalid_argument.
void validate_static(const ExperimentConfig& config);

/// Distance from the data support to the nearest box edge, or nullopt for
/// periodic data families.
std::optional<double> support_clearance(const ExperimentConfig& config);

}  // namespace randwave
