#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "cset/core.hpp"

namespace cset {

IntSet scale(std::int64_t q, const IntSet& a);
IntSet translate(const IntSet& a, std::int64_t s);
IntSet set_union(const IntSet& a, const IntSet& b);
bool disjoint(const IntSet& a, const IntSet& b);

/// Deduplicated {a_i * b_j}.
IntSet prodset(const IntSet& a, const IntSet& b);

/// Deduplicated two-fold sumset {a_i + a_j : i <= j}.
IntSet sumset2(const IntSet& a);

/// Product and sum of a multiset that is never materialized: every index
/// combination contributes, with multiplicity.
struct MultisetAggregate {
  std::uint64_t count = 0;
  std::int64_t total = 0;
  /// product mod |total|, present when total != 0.
  std::optional<std::uint64_t> product_residue;
  bool product_is_zero = false;
  /// product / total, present when the division is exact.
  std::optional<mpz_class> quotient;

  /// Integer b with product = b * total exists.
  bool divisible() const noexcept;
};

/// All |a| * |b| pairwise products a_i * b_j.
MultisetAggregate pairwise_product_multiset(const IntSet& a, const IntSet& b);

/// All n(n+1)/2 sums a_i + a_j with i <= j.
MultisetAggregate pair_sum_multiset(const IntSet& a);

enum class TheoremKind {
  prodset,
  union_t,
  zero_sum_augment,
  scaled_difference,
  sumset2,
  scalar,
};

std::string_view to_string(TheoremKind kind) noexcept;

struct TheoremReport {
  TheoremKind theorem = TheoremKind::prodset;
  bool condition_met = false;
  std::string condition_detail;
  /// t for the union and scaled-difference parts, q for the scalar part.
  std::optional<std::int64_t> parameter;
  /// Witnessing index pair (i < j) for the sumset part.
  std::optional<std::pair<std::size_t, std::size_t>> index_pair;

  std::optional<IntSet> constructed_set;
  /// Completeness of constructed_set, as decided by is_complete().
  std::optional<bool> set_complete;
  std::optional<MultisetAggregate> multiset;

  /// The theorem's conclusion as re-verified: multiset divisibility for the
  /// product-set part, set completeness for every other part.
  bool constructed_complete = false;
};

TheoremReport check_prodset_theorem(const IntSet& a, const IntSet& b);
TheoremReport check_union_t_condition(const IntSet& a, const IntSet& b);
TheoremReport augment_zero_sum(const IntSet& a, const IntSet& h);
TheoremReport check_scaled_difference(const IntSet& a, std::int64_t t);
TheoremReport check_sumset2_theorem(const IntSet& a);
TheoremReport check_scalar_theorem(const IntSet& a, std::int64_t q);

struct HomogeneousAP {
  std::int64_t d = 0;
  std::uint64_t n = 0;

  friend bool operator==(const HomogeneousAP&, const HomogeneousAP&) = default;
};

/// {d, 2d, ..., nd}.
IntSet make_homogeneous_ap(std::int64_t d, std::uint64_t n);

/// (d, n) when a is exactly {d, 2d, ..., nd}; d is negative when every
/// element is.
std::optional<HomogeneousAP> recognize_homogeneous_ap(const IntSet& a);

}  // namespace cset
