#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cset/core.hpp"

namespace cset {

inline constexpr int kMaxCensusN = 30;

struct CensusReport {
  int n = 0;
  int min_size = 2;
  std::uint64_t total = 0;
  /// size -> number of complete subsets of that size (sizes >= min_size).
  std::map<int, std::uint64_t> by_size;
  std::uint64_t ap_lower_bound = 0;
  unsigned worker_count = 1;
  std::chrono::milliseconds elapsed{0};
};

/// Exact number of complete subsets of {1..n} with at least min_size
/// elements. Throws NTooLarge unless 1 <= n <= 30.
CensusReport census(int n, int min_size = 2, unsigned workers = 1);

/// Sum over odd j in [3, n] of floor(n / j): the number of homogeneous
/// progressions of odd length >= 3 inside [1, n].
std::uint64_t ap_lower_bound(std::uint64_t n);

using SubsetSink = std::function<void(const IntSet&)>;

/// Streams every complete subset of {1..n} whose size lies in
/// [min_size, max_size], ordered by bitmask value (element k is bit k-1).
/// The order does not depend on the worker count.
std::uint64_t enumerate_complete(int n, int min_size, int max_size,
                                 const SubsetSink& sink, unsigned workers = 1);

enum class GrowthFlavor { exact, ap_bound };

struct GrowthRow {
  std::uint64_t n = 0;
  std::uint64_t value = 0;
  GrowthFlavor flavor = GrowthFlavor::exact;
  double nlogn = 0.0;
  double nloglog = 0.0;
  /// value / nlogn and value / nloglog; absent while the denominator is
  /// not positive (n < 3).
  std::optional<double> ratio_lower;
  std::optional<double> ratio_upper;
};

/// Exact census totals for n <= exact_up_to, the progression bound beyond.
std::vector<GrowthRow> growth_table(std::span<const std::uint64_t> ns,
                                    int exact_up_to, int min_size = 2,
                                    unsigned workers = 1);

/// CSET_THREADS when set to a positive integer, else hardware concurrency.
unsigned default_worker_count();

}  // namespace cset
