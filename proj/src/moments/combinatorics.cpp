#include "randwave/moments/combinatorics.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace randwave {
namespace {

void check_stirling_args(int j, int r) {
  if (r < 0 || j < r || j > 30) throw std::invalid_argument("Stirling numbers need 0 <= r <= j <= 30");
}

}  // namespace

BigInt stirling2_recurrence(int j, int r) {
  check_stirling_args(j, r);
  std::vector<BigInt> row(static_cast<std::size_t>(r) + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int n = 1; n <= j; ++n) {
    for (int k = std::min(n, r); k >= 1; --k) {
      row[static_cast<std::size_t>(k)] = BigInt(k) * row[static_cast<std::size_t>(k)] +
                                         row[static_cast<std::size_t>(k - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(r)];
}

BigInt stirling2(int j, int r) {
  check_stirling_args(j, r);
  BigInt sum = 0;
  for (int i = 0; i <= r; ++i) {
    const BigInt term = binomial(static_cast<unsigned>(r), static_cast<unsigned>(i)) *
                        pow(BigInt(r - i), static_cast<unsigned long>(j));
    if (i % 2 == 0) sum += term; else sum -= term;
  }
  const BigInt fr = factorial(static_cast<unsigned>(r));
  if (sum % fr != 0) throw std::logic_error("Stirling alternating sum is not divisible by r!");
  BigInt s = sum / fr;
  if (s != stirling2_recurrence(j, r)) throw std::logic_error("Stirling formula and recurrence disagree");
  return s;
}

BigInt bell_number(int j) {
  if (j < 0 || j > 30) throw std::invalid_argument("Bell numbers need 0 <= j <= 30");
  std::vector<BigInt> row{1};
  for (int n = 1; n <= j; ++n) {
    std::vector<BigInt> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

SurjectionCount surjection_count(int N, int r) {
  if (r < 1 || N < r || N > 30) throw std::invalid_argument("surjection count needs 1 <= r <= N <= 30");
  SurjectionCount out;
  out.count = factorial(static_cast<unsigned>(r)) * stirling2(N, r);
  out.total_bound = out.count <= pow(BigInt(r), static_cast<unsigned long>(N));
  // count / r^(N-r) <= r^r  <=>  count <= r^r r^(N-r), kept as its own check.
  const mpq_class lhs(out.count, pow(BigInt(r), static_cast<unsigned long>(N - r)));
  out.refined_bound = lhs <= mpq_class(pow(BigInt(r), static_cast<unsigned long>(r)));
  return out;
}

StirlingBoundCheck stirling_refined_bound_check(int j, int r) {
  if (r < 1 || j < r || j > 20) throw std::invalid_argument("refined bound check needs 1 <= r <= j <= 20");
  StirlingBoundCheck out;
  const BigInt s = stirling2(j, r);
  const BigInt c = binomial(static_cast<unsigned>(j), static_cast<unsigned>(r));
  out.applicable = r < j;
  if (out.applicable) {
    out.stirling_bound = 2 * s <= c * pow(BigInt(r), static_cast<unsigned long>(j - r));
  } else {
    out.stirling_bound = s == 1 && s <= c;
  }
  const long double cap = std::pow(std::numbers::e_v<long double> * j / r, static_cast<long double>(r));
  out.binomial_bound = static_cast<long double>(c.get_d()) <= cap;
  return out;
}

namespace {

void profiles(int remaining, int parts, int max_part, std::vector<int>& current,
              std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (int a = std::min(remaining - (parts - 1), max_part); a >= 1; --a) {
    current.push_back(a);
    profiles(remaining - a, parts - 1, a, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<PartitionClass> partition_classes(int j) {
  if (j < 1 || j > 12) throw std::invalid_argument("partition classes need 1 <= j <= 12");
  std::vector<PartitionClass> out;
  for (int r = 1; r <= j; ++r) {
    std::vector<std::vector<int>> list;
    std::vector<int> current;
    profiles(j, r, j, current, list);
    for (auto& alpha : list) {
      PartitionClass pc;
      pc.j = j;
      pc.r = r;
      BigInt denom = 1;
      std::map<int, unsigned> mult;
      for (int a : alpha) {
        denom *= factorial(static_cast<unsigned>(a));
        ++mult[a];
        if (a % 2 == 1) ++pc.r_odd;
      }
      for (const auto& [a, m] : mult) denom *= factorial(m);
      pc.count = factorial(static_cast<unsigned>(j)) / denom;
      pc.multiplicities = std::move(alpha);
      out.push_back(std::move(pc));
    }
  }
  return out;
}

}  // namespace randwave
