#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "randwave/picard/duhamel.hpp"
#include "randwave/randomization/randomized_data.hpp"

namespace randwave {

/// Any iterate norm above this, or a non-finite one, aborts the iteration.
inline constexpr double kBlowUpThreshold = 1e12;

class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(int order, const std::string& what)
      : std::runtime_error(what), order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

/// The three series of the free wave launched by randomized data.
struct FreeEvolution {
  FieldSeries u;
  FieldSeries dt_u;
  FieldSeries d_u;  // the chosen derivative
};

struct IterateNorms {
  double h1_sup = 0.0;    // sup_t ||u(t)||_{H^1 homogeneous}
  double l2_dt_sup = 0.0; // sup_t ||d_t u(t)||_{L^2}
  double l2t_l4x = 0.0;   // ||d u||_{L^2_t L^4_x}
};

struct IterateRecord {
  int n = 0;
  FieldSeries u;
  FieldSeries dt_u;
  FieldSeries d_u;
  IterateNorms norms;
  std::uint64_t seed = 0;
  std::string config_hash;
};

nlohmann::json to_json(const IterateRecord& record);

/// Writes the final-time field of each tracked series as <stem>_<tag>.rwfd.
void dump_final_fields(const std::filesystem::path& directory, const std::string& stem,
                       const IterateRecord& record);

IterateNorms compute_norms(const FieldSeries& u, const FieldSeries& dt_u, const FieldSeries& d_u);

/// Runs the recursion d u^(n) = d u^(0) + A_0(d u^(n-1), d u^(n-1)) with u and
/// d_t u tracked alongside. Reuses one set of lattice tables for any number of
/// samples; thread-safe.
class PicardEngine {
 public:
  PicardEngine(std::shared_ptr<const WaveOperators> ops, Deriv deriv);

  const WaveOperators& operators() const { return *ops_; }
  Deriv deriv() const { return deriv_; }

  FreeEvolution free_evolution(const RandomizedData& data) const;
  IterateRecord zeroth(const RandomizedData& data) const;
  /// The next iterate from the zeroth one and the previous one. Throws
  /// BlowUpError when a norm exceeds kBlowUpThreshold or is not finite.
  IterateRecord step(const IterateRecord& zeroth, const IterateRecord& previous) const;
  /// Records for orders 0..n in order.
  std::vector<IterateRecord> iterate(int n, const RandomizedData& data) const;

 private:
  std::shared_ptr<const WaveOperators> ops_;
  Deriv deriv_;
};

FreeEvolution free_evolution(const RandomizedData& data, const TimeGrid& time_grid,
                             Deriv deriv = Deriv::kX1);

/// Throws std::invalid_argument for n < 0.
IterateRecord picard_iterate(int n, const RandomizedData& data, const TimeGrid& time_grid,
                             Deriv deriv = Deriv::kX1);

struct EnergyCheck {
  double lhs = 0.0;  // ||u^(n)||_{L^inf H^1} + ||d_t u^(n)||_{L^inf L^2}
  double rhs = 0.0;  // zeroth-iterate norms + ||d u^(n-1)||^2_{L^2 L^4}
  double constant = 0.0;  // smallest C with lhs <= C rhs; 0 when both vanish
  bool holds(double c) const { return lhs <= c * rhs; }
};

EnergyCheck energy_inequality_check(const IterateRecord& current, const IterateRecord& previous,
                                    const IterateRecord& zeroth);

}  // namespace randwave
