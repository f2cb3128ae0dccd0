#include "cset/algebra.hpp"

#include <string>
#include <vector>

#include "cset/error.hpp"
#include "int_math.hpp"

namespace cset {
namespace {

void require_complete(const IntSet& a, const char* name) {
  if (a.empty() || !is_complete(a)) {
    throw Error(ErrorKind::NotComplete, std::string(name) + " is not complete");
  }
}

std::string format_set(const IntSet& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out + "}";
}

// Fills residue, zero flag and exact quotient once total and the exact
// product are known.
void finish_aggregate(MultisetAggregate& agg, std::uint64_t residue,
                      const mpz_class& product) {
  if (agg.total != 0) agg.product_residue = residue;
  if (!agg.divisible()) return;
  if (agg.total == 0) {
    agg.quotient = mpz_class(0);
    return;
  }
  mpz_class q;
  mpz_class total = detail::to_mpz(agg.total);
  mpz_divexact(q.get_mpz_t(), product.get_mpz_t(), total.get_mpz_t());
  agg.quotient = std::move(q);
}

void fill_from_set(TheoremReport& report, IntSet constructed) {
  report.set_complete = !constructed.empty() && is_complete(constructed);
  report.constructed_complete = *report.set_complete;
  report.constructed_set = std::move(constructed);
}

}  // namespace

std::string_view to_string(TheoremKind kind) noexcept {
  switch (kind) {
    case TheoremKind::prodset: return "prodset";
    case TheoremKind::union_t: return "union_t";
    case TheoremKind::zero_sum_augment: return "zero_sum_augment";
    case TheoremKind::scaled_difference: return "scaled_difference";
    case TheoremKind::sumset2: return "sumset2";
    case TheoremKind::scalar: return "scalar";
  }
  return "unknown";
}

IntSet scale(std::int64_t q, const IntSet& a) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "scale factor must be nonzero");
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (std::int64_t x : a) out.push_back(detail::checked_mul(q, x));
  return IntSet::collect(std::move(out));
}

IntSet translate(const IntSet& a, std::int64_t s) {
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (std::int64_t x : a) out.push_back(detail::checked_add(x, s));
  return IntSet::collect(std::move(out));
}

IntSet set_union(const IntSet& a, const IntSet& b) {
  std::vector<std::int64_t> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return IntSet::collect(std::move(out));
}

bool disjoint(const IntSet& a, const IntSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

IntSet prodset(const IntSet& a, const IntSet& b) {
  std::vector<std::int64_t> out;
  out.reserve(a.size() * b.size());
  for (std::int64_t x : a)
    for (std::int64_t y : b) out.push_back(detail::checked_mul(x, y));
  return IntSet::collect(std::move(out));
}

IntSet sumset2(const IntSet& a) {
  std::vector<std::int64_t> out;
  out.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      out.push_back(detail::checked_add(a[i], a[j]));
  return IntSet::collect(std::move(out));
}

bool MultisetAggregate::divisible() const noexcept {
  if (total == 0) return product_is_zero;
  return product_residue && *product_residue == 0;
}

MultisetAggregate pairwise_product_multiset(const IntSet& a, const IntSet& b) {
  MultisetAggregate agg;
  agg.count = a.size() * b.size();
  agg.total = detail::checked_mul(set_sum(a), set_sum(b));
  agg.product_is_zero = a.contains(0) || b.contains(0);
  std::uint64_t m = agg.total == 0 ? 1 : detail::abs_u64(agg.total);
  std::uint64_t residue = 1 % m;
  for (std::int64_t x : a) {
    std::uint64_t rx = detail::euclid_mod(x, m);
    for (std::int64_t y : b) {
      residue = detail::mul_mod(residue,
                                detail::mul_mod(rx, detail::euclid_mod(y, m), m), m);
    }
  }
  // (prod a)^|b| * (prod b)^|a|
  mpz_class pa = exact_product(a);
  mpz_class pb = exact_product(b);
  mpz_class product;
  mpz_class tmp;
  mpz_pow_ui(product.get_mpz_t(), pa.get_mpz_t(), b.size());
  mpz_pow_ui(tmp.get_mpz_t(), pb.get_mpz_t(), a.size());
  product *= tmp;
  finish_aggregate(agg, residue, product);
  return agg;
}

MultisetAggregate pair_sum_multiset(const IntSet& a) {
  MultisetAggregate agg;
  const std::size_t n = a.size();
  agg.count = n * (n + 1) / 2;
  agg.total = detail::checked_mul(static_cast<std::int64_t>(n) + 1, set_sum(a));
  std::uint64_t m = agg.total == 0 ? 1 : detail::abs_u64(agg.total);
  std::uint64_t residue = 1 % m;
  mpz_class product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::int64_t s = detail::checked_add(a[i], a[j]);
      if (s == 0) agg.product_is_zero = true;
      residue = detail::mul_mod(residue, detail::euclid_mod(s, m), m);
      product *= detail::to_mpz(s);
    }
  }
  finish_aggregate(agg, residue, product);
  return agg;
}

TheoremReport check_prodset_theorem(const IntSet& a, const IntSet& b) {
  require_complete(a, "first set");
  require_complete(b, "second set");
  if (set_sum(a) == 0 || set_sum(b) == 0) {
    throw Error(ErrorKind::ZeroSum, "the product-set argument divides by both sums");
  }
  TheoremReport report;
  report.theorem = TheoremKind::prodset;
  report.condition_met = true;
  report.multiset = pairwise_product_multiset(a, b);
  IntSet dedup = prodset(a, b);
  report.set_complete = is_complete(dedup);
  report.constructed_set = std::move(dedup);
  report.constructed_complete = report.multiset->divisible();
  report.condition_detail =
      "both sets complete with nonzero sums; multiset of " +
      std::to_string(report.multiset->count) + " pairwise products " +
      (report.constructed_complete ? "is" : "is not") + " divisible by " +
      std::to_string(report.multiset->total) + "; deduplicated product set " +
      (*report.set_complete ? "is" : "is not") + " complete";
  return report;
}

TheoremReport check_union_t_condition(const IntSet& a, const IntSet& b) {
  require_complete(a, "first set");
  require_complete(b, "second set");
  if (!disjoint(a, b)) throw Error(ErrorKind::NotDisjoint, "sets share an element");

  TheoremReport report;
  report.theorem = TheoremKind::union_t;

  // t comes from the first pair with a nonzero sum; pairs with a zero sum
  // need a zero product whatever t is.
  std::optional<mpz_class> t;
  for (std::int64_t x : a) {
    for (std::int64_t y : b) {
      mpz_class prod = detail::to_mpz(x) * detail::to_mpz(y);
      mpz_class sum = detail::to_mpz(x) + detail::to_mpz(y);
      if (!t) {
        if (sum == 0) {
          if (prod != 0) {
            report.condition_detail = "pair (" + std::to_string(x) + "," +
                                      std::to_string(y) +
                                      ") has zero sum but nonzero product";
            return report;
          }
          continue;
        }
        if (!mpz_divisible_p(prod.get_mpz_t(), sum.get_mpz_t())) {
          report.condition_detail = "pair (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") gives t = " +
                                    prod.get_str() + "/" + sum.get_str() +
                                    ", not an integer";
          return report;
        }
        t = prod / sum;
        continue;
      }
      if (prod != *t * sum) {
        report.condition_detail = "t = " + t->get_str() + " fails for pair (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")";
        return report;
      }
    }
  }
  if (!t) {
    report.condition_detail = "every pair has zero sum; t is undetermined";
    return report;
  }
  if (!t->fits_slong_p()) {
    throw Error(ErrorKind::Overflow, "t = " + t->get_str() + " exceeds 64 bits");
  }
  report.condition_met = true;
  report.parameter = t->get_si();
  report.condition_detail = "t = " + t->get_str() +
                            " satisfies a_i*b_j = t*(a_i+b_j) for every pair";
  fill_from_set(report, set_union(a, b));
  return report;
}

TheoremReport augment_zero_sum(const IntSet& a, const IntSet& h) {
  require_complete(a, "base set");
  if (!disjoint(a, h)) throw Error(ErrorKind::NotDisjoint, "sets share an element");
  if (set_sum(h) != 0) {
    throw Error(ErrorKind::NonZeroSum,
                "added set sums to " + std::to_string(set_sum(h)) + ", not 0");
  }
  TheoremReport report;
  report.theorem = TheoremKind::zero_sum_augment;
  report.condition_met = true;
  report.condition_detail = "base complete, " + format_set(h) +
                            " disjoint from it with zero sum";
  fill_from_set(report, set_union(a, h));
  return report;
}

TheoremReport check_scaled_difference(const IntSet& a, std::int64_t t) {
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "t must be nonzero");
  require_complete(a, "base set");
  TheoremReport report;
  report.theorem = TheoremKind::scaled_difference;
  report.condition_met = true;
  report.parameter = t;
  report.condition_detail = "b_i = " + std::to_string(t) + " * a_i for every i";
  fill_from_set(report, scale(t, a));
  return report;
}

TheoremReport check_sumset2_theorem(const IntSet& a) {
  require_complete(a, "base set");
  const std::size_t n = a.size();
  TheoremReport report;
  report.theorem = TheoremKind::sumset2;

  IntSet two_a = sumset2(a);
  const bool all_distinct = two_a.size() == n * (n + 1) / 2;
  const auto modulus = static_cast<std::uint64_t>(n + 1);
  for (std::size_t i = 0; i < n && !report.index_pair; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (detail::euclid_mod(detail::checked_add(a[i], a[j]), modulus) == 0) {
        report.index_pair = std::pair{i, j};
        break;
      }
    }
  }
  report.condition_met = all_distinct && report.index_pair.has_value();

  if (!all_distinct) {
    report.condition_detail = "|2A| = " + std::to_string(two_a.size()) +
                              ", expected " + std::to_string(n * (n + 1) / 2);
  } else if (!report.index_pair) {
    report.condition_detail = "no pair a_i + a_j (i != j) divisible by " +
                              std::to_string(n + 1);
  } else {
    auto [i, j] = *report.index_pair;
    report.condition_detail = std::to_string(n + 1) + " divides " +
                              std::to_string(a[i]) + " + " + std::to_string(a[j]);
  }
  report.multiset = pair_sum_multiset(a);
  fill_from_set(report, std::move(two_a));
  return report;
}

TheoremReport check_scalar_theorem(const IntSet& a, std::int64_t q) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "q must be nonzero");
  require_complete(a, "base set");
  TheoremReport report;
  report.theorem = TheoremKind::scalar;
  report.condition_met = true;
  report.parameter = q;
  report.condition_detail = "scaled by q = " + std::to_string(q);
  fill_from_set(report, scale(q, a));
  return report;
}

IntSet make_homogeneous_ap(std::int64_t d, std::uint64_t n) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "common difference must be nonzero");
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "length must be positive");
  if (n > static_cast<std::uint64_t>(INT64_MAX)) {
    throw Error(ErrorKind::Overflow, "length exceeds 64-bit range");
  }
  std::vector<std::int64_t> out;
  out.reserve(n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    out.push_back(detail::checked_mul(d, static_cast<std::int64_t>(k)));
  }
  return IntSet::collect(std::move(out));
}

std::optional<HomogeneousAP> recognize_homogeneous_ap(const IntSet& a) {
  if (a.empty()) return std::nullopt;
  const std::size_t n = a.size();
  const bool positive = a[0] > 0;
  if (!positive && a[n - 1] >= 0) return std::nullopt;
  const std::int64_t d = positive ? a[0] : a[n - 1];
  for (std::size_t k = 0; k < n; ++k) {
    const auto multiple = static_cast<__int128>(positive ? k + 1 : n - k);
    if (static_cast<__int128>(a[k]) != multiple * d) return std::nullopt;
  }
  return HomogeneousAP{d, n};
}

}  // namespace cset
