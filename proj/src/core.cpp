#include "cset/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cset/error.hpp"
#include "int_math.hpp"

namespace cset {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DegenerateSet: return "DegenerateSet";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::ZeroSum: return "ZeroSum";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NonZeroSum: return "NonZeroSum";
    case ErrorKind::NTooLarge: return "NTooLarge";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

IntSet IntSet::collect(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return IntSet(std::move(values));
}

bool IntSet::contains(std::int64_t value) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), value);
}

IntSet make_set(std::vector<std::int64_t> values) {
  if (values.empty()) {
    throw Error(ErrorKind::EmptyInput, "a set needs at least one element");
  }
  std::sort(values.begin(), values.end());
  auto dup = std::adjacent_find(values.begin(), values.end());
  if (dup != values.end()) {
    throw Error(ErrorKind::DuplicateElement,
                "element " + std::to_string(*dup) + " appears more than once");
  }
  return IntSet(std::move(values));
}

std::int64_t set_sum(const IntSet& a) {
  std::int64_t sum = 0;
  for (std::int64_t x : a) sum = detail::checked_add(sum, x);
  return sum;
}

std::uint64_t product_mod(const IntSet& a, std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  if (m == 1) return 0;
  std::uint64_t acc = 1;
  for (std::int64_t x : a) {
    acc = detail::mul_mod(acc, detail::euclid_mod(x, m), m);
    if (acc == 0) break;
  }
  return acc;
}

mpz_class exact_product(const IntSet& a) {
  mpz_class p = 1;
  for (std::int64_t x : a) p *= detail::to_mpz(x);
  return p;
}

bool is_complete(const IntSet& a) {
  if (a.empty()) {
    throw Error(ErrorKind::EmptyInput, "completeness is undefined for the empty set");
  }
  std::int64_t sum = set_sum(a);
  if (sum == 0) return a.contains(0);
  return product_mod(a, detail::abs_u64(sum)) == 0;
}

Certificate certificate(const IntSet& a) {
  Certificate cert;
  cert.set = a;
  cert.sum = set_sum(a);
  bool complete = is_complete(a);
  if (cert.sum == 0) {
    if (complete) cert.witness = mpz_class(0);
    return cert;
  }
  cert.residue = product_mod(a, detail::abs_u64(cert.sum));
  if (complete) {
    mpz_class product = exact_product(a);
    mpz_class sum = detail::to_mpz(cert.sum);
    mpz_class b;
    mpz_divexact(b.get_mpz_t(), product.get_mpz_t(), sum.get_mpz_t());
    cert.witness = std::move(b);
  }
  return cert;
}

std::uint64_t gcd_of_differences(const IntSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptyInput, "empty set has no differences");
  std::uint64_t g = 0;
  for (std::int64_t x : a) g = std::gcd(g, detail::distance(a[0], x));
  return g;
}

NormalFormResult normal_form(const IntSet& a) {
  if (a.size() < 2) {
    throw Error(a.empty() ? ErrorKind::EmptyInput : ErrorKind::DegenerateSet,
                "normal form needs at least two elements");
  }
  NormalFormResult result;
  result.original = a;
  result.d = gcd_of_differences(a);
  std::vector<std::int64_t> scaled;
  scaled.reserve(a.size());
  for (std::int64_t x : a) {
    std::uint64_t q = detail::distance(a[0], x) / result.d;
    if (q > static_cast<std::uint64_t>(INT64_MAX)) {
      throw Error(ErrorKind::Overflow, "normalized element exceeds 64-bit range");
    }
    scaled.push_back(static_cast<std::int64_t>(q));
  }
  result.normalized = IntSet::collect(std::move(scaled));
  return result;
}

}  // namespace cset
