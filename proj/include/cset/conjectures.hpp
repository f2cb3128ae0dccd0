#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cset/core.hpp"

namespace cset {

IntSet first_odd_primes(std::uint64_t n);

/// Number of distinct prime divisors of |m|. Throws ZeroInput for 0.
unsigned omega(std::int64_t m);

bool is_prime(std::uint64_t m);

struct PrimeFinding {
  std::uint64_t n = 0;
  IntSet primes;
  std::int64_t sum = 0;
  bool is_complete = false;
  bool sum_is_prime = false;
  unsigned omega_sum = 0;
  bool holds = false;
};

/// One finding per n in [1, max_n]: odd n only unless include_even.
std::vector<PrimeFinding> scan_prime_conjecture(std::uint64_t max_n,
                                                bool include_even = false);

struct ExtensionResult {
  IntSet base;
  IntSet added;
  bool combined_complete = false;
  std::uint64_t search_bound = 0;
};

/// Smallest, then lexicographically smallest, set of at most max_added
/// positive integers <= bound, disjoint from t, completing t.
std::optional<ExtensionResult> complete_extension(const IntSet& t,
                                                  std::uint64_t bound,
                                                  unsigned max_added);

struct GeometricHit {
  std::int64_t r = 0;
  unsigned n = 0;

  friend bool operator==(const GeometricHit&, const GeometricHit&) = default;
};

/// Every (r, n) with r in [r_min, r_max] \ {-1, 0, 1} and n in [2, n_max]
/// such that {r, r^2, ..., r^n} is complete, ascending in r then n.
std::vector<GeometricHit> geometric_search(std::int64_t r_min,
                                           std::int64_t r_max, unsigned n_max);

/// Smallest s in [1, m) with f + s complete. Throws NotComplete unless f is.
std::optional<std::int64_t> translate_search(const IntSet& f, std::int64_t m);

}  // namespace cset
