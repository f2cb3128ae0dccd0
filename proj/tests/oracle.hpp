#pragma once

// Reference implementations for the test suites. They use Boost's cpp_int
// and plain loops only, never the library's modular path or GMP.

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cset::oracle {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt product(const std::vector<std::int64_t>& values) {
  BigInt p = 1;
  for (std::int64_t v : values) p *= v;
  return p;
}

inline BigInt sum(const std::vector<std::int64_t>& values) {
  BigInt s = 0;
  for (std::int64_t v : values) s += v;
  return s;
}

/// product = b * sum for some integer b.
inline bool is_complete(const std::vector<std::int64_t>& values) {
  const BigInt p = product(values);
  const BigInt s = sum(values);
  if (s == 0) return p == 0;
  return p % s == 0;
}

/// Complete-subset counts of {1..n} by size, index = size.
inline std::vector<std::uint64_t> naive_census(int n) {
  std::vector<std::uint64_t> by_size(n + 1, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::int64_t> subset;
    for (int k = 1; k <= n; ++k) {
      if (mask >> (k - 1) & 1) subset.push_back(k);
    }
    if (is_complete(subset)) ++by_size[subset.size()];
  }
  return by_size;
}

/// Complete-subset counts of {1..n} by size, via a knapsack over
/// (partial sum, gcd(partial product, target)) for every target sum.
/// Shares nothing with the bitmask enumeration. Index = size.
inline std::vector<std::uint64_t> divisor_dp_census(int n, bool by_size = true) {
  const int max_sum = n * (n + 1) / 2;
  const int sizes = by_size ? n + 1 : 1;
  std::vector<std::uint64_t> result(n + 1, 0);
  for (int target = 1; target <= max_sum; ++target) {
    std::vector<int> divisors;
    std::vector<int> index(target + 1, -1);
    for (int d = 1; d <= target; ++d) {
      if (target % d == 0) {
        index[d] = static_cast<int>(divisors.size());
        divisors.push_back(d);
      }
    }
    const std::size_t nd = divisors.size();
    // dp[(size * (target + 1) + sum) * nd + divisor]
    std::vector<std::uint64_t> dp(static_cast<std::size_t>(sizes) * (target + 1) * nd, 0);
    auto at = [&](int size, int sum, std::size_t g) -> std::uint64_t& {
      return dp[(static_cast<std::size_t>(size) * (target + 1) + sum) * nd + g];
    };
    at(0, 0, 0) = 1;
    for (int k = 1; k <= n && k <= target; ++k) {
      for (int size = by_size ? std::min(k - 1, n - 1) : 0; size >= 0; --size) {
        for (int sum = target - k; sum >= 0; --sum) {
          for (std::size_t g = 0; g < nd; ++g) {
            const std::uint64_t ways = at(size, sum, g);
            if (!ways) continue;
            const int next = std::gcd(divisors[g] * k, target);
            at(by_size ? size + 1 : 0, sum + k, index[next]) += ways;
          }
        }
      }
    }
    for (int size = 0; size < sizes; ++size) result[size] += at(size, target, nd - 1);
  }
  return result;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

/// b = d^(n-1) * (2(n-2)! - 4(n-2)!/(n+1)) for {d, ..., nd}, odd n >= 3.
inline BigInt progression_witness(std::int64_t d, std::uint64_t n) {
  const BigInt f = factorial(n - 2);
  BigInt dpow = 1;
  for (std::uint64_t k = 0; k + 1 < n; ++k) dpow *= d;
  return dpow * (2 * f - 4 * f / (n + 1));
}

/// Random set of distinct integers from [lo, hi], size in [1, max_size].
inline std::vector<std::int64_t> random_set(std::mt19937_64& rng, int max_size,
                                            std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::uniform_int_distribution<std::int64_t> value_dist(lo, hi);
  const int size = size_dist(rng);
  std::set<std::int64_t> picked;
  while (static_cast<int>(picked.size()) < size) picked.insert(value_dist(rng));
  return {picked.begin(), picked.end()};
}

/// Rejection-samples a complete set (nonzero sum when required).
template <typename Pred>
std::vector<std::int64_t> random_set_where(std::mt19937_64& rng, int max_size,
                                           std::int64_t lo, std::int64_t hi,
                                           Pred&& accept) {
  while (true) {
    auto values = random_set(rng, max_size, lo, hi);
    if (accept(values)) return values;
  }
}

}  // namespace cset::oracle
