#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace cset {

/// A finite set of distinct 64-bit integers kept in ascending order.
///
/// Sets built from user input go through make_set(), which rejects
/// duplicates and empty input. Operation results (unions, product sets,
/// sumsets) go through IntSet::collect(), which deduplicates and may yield
/// the empty set.
class IntSet {
 public:
  using value_type = std::int64_t;
  using const_iterator = std::vector<std::int64_t>::const_iterator;

  IntSet() = default;

  /// Sorts and deduplicates; the result may be empty.
  static IntSet collect(std::vector<std::int64_t> values);

  std::span<const std::int64_t> elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(std::int64_t value) const noexcept;

  std::int64_t operator[](std::size_t i) const { return elems_[i]; }
  const_iterator begin() const noexcept { return elems_.begin(); }
  const_iterator end() const noexcept { return elems_.end(); }

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  explicit IntSet(std::vector<std::int64_t> sorted_unique)
      : elems_(std::move(sorted_unique)) {}

  friend IntSet make_set(std::vector<std::int64_t> values);

  std::vector<std::int64_t> elems_;
};

/// Canonical set from user values. Throws EmptyInput or DuplicateElement.
IntSet make_set(std::vector<std::int64_t> values);

/// Exact sum; throws Overflow when it leaves the 64-bit range.
std::int64_t set_sum(const IntSet& a);

/// Product of the elements reduced into [0, m), m >= 1. Each factor is
/// reduced with a Euclidean remainder first, so negative elements are fine.
std::uint64_t product_mod(const IntSet& a, std::uint64_t m);

/// Exact product of the elements (1 for the empty set).
mpz_class exact_product(const IntSet& a);

/// True iff product = b * sum for some integer b. With sum 0 that forces
/// the product to be 0, i.e. the set contains 0. Throws EmptyInput.
bool is_complete(const IntSet& a);

struct Certificate {
  IntSet set;
  std::int64_t sum = 0;
  /// Present exactly when the set is complete (0 when sum = 0).
  std::optional<mpz_class> witness;
  /// product mod |sum|; absent when sum = 0.
  std::optional<std::uint64_t> residue;
};

Certificate certificate(const IntSet& a);

/// gcd of a_i - a_0; 0 exactly for singletons.
std::uint64_t gcd_of_differences(const IntSet& a);

struct NormalFormResult {
  IntSet original;
  std::uint64_t d = 0;
  IntSet normalized;
};

/// {(a_i - a_0) / d} with d the gcd of differences. Throws DegenerateSet
/// for singletons, where d is 0.
NormalFormResult normal_form(const IntSet& a);

}  // namespace cset
