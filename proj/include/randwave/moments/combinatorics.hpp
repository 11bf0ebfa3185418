#pragma once

#include <vector>

#include "randwave/core/bigint.hpp"

namespace randwave {

/// S(j, r) by the alternating sum (1/r!) sum_i (-1)^i C(r,i) (r-i)^j,
/// cross-checked against the triangular recurrence. Requires 0 <= r <= j <= 30;
/// throws std::invalid_argument otherwise and std::logic_error on a mismatch.
BigInt stirling2(int j, int r);

/// S(j, r) from S(j, r) = r S(j-1, r) + S(j-1, r-1) alone.
BigInt stirling2_recurrence(int j, int r);

/// Bell(j) = sum_r S(j, r) computed independently by the Bell triangle.
BigInt bell_number(int j);

struct SurjectionCount {
  BigInt count;          // r! S(N, r)
  bool total_bound = false;    // count <= r^N
  bool refined_bound = false;  // count / r^(N-r) <= r^r
};

/// Requires 1 <= r <= N <= 30.
SurjectionCount surjection_count(int N, int r);

struct StirlingBoundCheck {
  bool applicable = false;     // r < j; the r = j boundary is excluded
  bool stirling_bound = false; // 2 S(j, r) <= C(j, r) r^(j-r), exact
  bool binomial_bound = false; // C(j, r) <= (e j / r)^r
  bool pass() const { return (!applicable || stirling_bound) && binomial_bound; }
};

/// Requires 1 <= r <= j <= 20. At r = j only the binomial bound and
/// S(j, j) = 1 <= C(j, j) are checked.
StirlingBoundCheck stirling_refined_bound_check(int j, int r);

/// One multiplicity profile of a set partition of j labeled indices into r
/// blocks, with the number of set partitions having that profile.
struct PartitionClass {
  int j = 0;
  int r = 0;
  std::vector<int> multiplicities;  // nonincreasing, each >= 1, summing to j
  int r_odd = 0;                    // multiplicities that are odd
  BigInt count;                     // j! / (prod alpha_i! prod m_s!)
};

/// All profiles for 1 <= j <= 12, ordered by r then reverse-lexicographically.
std::vector<PartitionClass> partition_classes(int j);

}  // namespace randwave
