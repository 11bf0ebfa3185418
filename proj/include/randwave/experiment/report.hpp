#pragma once

#include <filesystem>
#include <iosfwd>

#include <json.hpp>

#include "randwave/experiment/runner.hpp"

namespace randwave {

inline constexpr const char* kCodeVersion = "0.1.0";

/// Per-sample CSV: sample,seed,n,finite,linf_h1,linf_l2_dt,l2t_l4x,energy_constant.
void write_rows_csv(std::ostream& out, const ExperimentReport& report);

/// Aggregates, verdicts, config echo, seeds and code version. No timestamps,
/// so equal inputs give equal output.
nlohmann::json summary_json(const ExperimentReport& report);

/// Writes rows.csv and summary.json, plus tails.csv (lambda,empirical,bound)
/// and scaling_n<k>.csv (log_T,log_median) when those studies are present.
/// Throws std::invalid_argument for a report without rows and
/// std::runtime_error naming the path on I/O failure.
void emit_report(const ExperimentReport& report, const std::filesystem::path& directory);

}  // namespace randwave
