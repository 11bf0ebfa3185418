#pragma once

#include <cstdint>
#include <vector>

#include "randwave/core/verdict.hpp"
#include "randwave/experiment/config.hpp"
#include "randwave/trees/tree_constants.hpp"

namespace randwave {

struct TreeSuiteResult {
  std::vector<TreeReportRow> rows;  // j <= 7
  std::vector<Verdict> verdicts;
};

/// Closed form of the iterated integrals, tree counts, C* bounds, the level
/// tree induction and the G~ bound study on the configured datum.
TreeSuiteResult run_tree_suite(const ExperimentConfig& config);

/// Moment identities, Khinchine ratios, decoupled moments, Stirling and
/// surjection bounds, partition classes and the tail converter.
std::vector<Verdict> run_moment_suite(std::uint64_t seed);

}  // namespace randwave
