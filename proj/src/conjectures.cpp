#include "cset/conjectures.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "cset/algebra.hpp"
#include "cset/error.hpp"
#include "int_math.hpp"

namespace cset {

IntSet first_odd_primes(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  // Sieve odd numbers, doubling the limit until n odd primes turn up.
  std::uint64_t limit = 64;
  while (true) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::int64_t> primes;
    for (std::uint64_t i = 3; i <= limit && primes.size() < n; i += 2) {
      if (composite[i]) continue;
      primes.push_back(static_cast<std::int64_t>(i));
      for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = true;
    }
    if (primes.size() == n) return IntSet::collect(std::move(primes));
    limit *= 2;
  }
}

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d <= m / d; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

unsigned omega(std::int64_t m) {
  if (m == 0) throw Error(ErrorKind::ZeroInput, "omega(0) is undefined");
  std::uint64_t rest = detail::abs_u64(m);
  unsigned count = 0;
  for (std::uint64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    ++count;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) ++count;
  return count;
}

std::vector<PrimeFinding> scan_prime_conjecture(std::uint64_t max_n,
                                                bool include_even) {
  std::vector<PrimeFinding> findings;
  if (max_n == 0) return findings;
  const IntSet all = first_odd_primes(max_n);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (!include_even && n % 2 == 0) continue;
    PrimeFinding f;
    f.n = n;
    f.primes = IntSet::collect({all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n)});
    f.sum = set_sum(f.primes);
    f.is_complete = is_complete(f.primes);
    f.sum_is_prime = is_prime(static_cast<std::uint64_t>(f.sum));
    f.omega_sum = omega(f.sum);
    f.holds = f.is_complete || f.sum_is_prime || f.omega_sum == 2;
    findings.push_back(std::move(f));
  }
  return findings;
}

std::optional<ExtensionResult> complete_extension(const IntSet& t,
                                                  std::uint64_t bound,
                                                  unsigned max_added) {
  for (std::int64_t x : t) {
    if (x < 1) throw Error(ErrorKind::InvalidArgument, "base set must hold positive integers");
  }
  ExtensionResult result;
  result.base = t;
  result.search_bound = bound;
  if (!t.empty() && is_complete(t)) {
    result.combined_complete = true;
    return result;
  }

  std::vector<std::int64_t> candidates;
  for (std::uint64_t x = 1; x <= bound; ++x) {
    if (x > static_cast<std::uint64_t>(INT64_MAX)) break;
    if (!t.contains(static_cast<std::int64_t>(x))) {
      candidates.push_back(static_cast<std::int64_t>(x));
    }
  }
  const std::int64_t base_sum = set_sum(t);

  // Combinations in lexicographic order, smallest cardinality first.
  for (unsigned k = 1; k <= max_added && k <= candidates.size(); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::int64_t sum = base_sum;
      for (std::size_t i : idx) sum = detail::checked_add(sum, candidates[i]);
      const std::uint64_t m = detail::abs_u64(sum);
      std::uint64_t residue = product_mod(t, m);
      for (std::size_t i : idx) {
        residue = detail::mul_mod(residue, detail::euclid_mod(candidates[i], m), m);
      }
      if (residue == 0) {
        std::vector<std::int64_t> added;
        for (std::size_t i : idx) added.push_back(candidates[i]);
        result.added = IntSet::collect(std::move(added));
        result.combined_complete = is_complete(set_union(t, result.added));
        return result;
      }
      // advance to the next combination
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == candidates.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

std::vector<GeometricHit> geometric_search(std::int64_t r_min,
                                           std::int64_t r_max, unsigned n_max) {
  std::vector<GeometricHit> hits;
  for (std::int64_t r = r_min; r <= r_max; ++r) {
    if (r >= -1 && r <= 1) continue;
    const mpz_class base = detail::to_mpz(r);
    mpz_class power = base;
    mpz_class sum = base;
    mpz_class product = base;
    for (unsigned n = 2; n <= n_max; ++n) {
      power *= base;
      sum += power;
      product *= power;
      if (mpz_divisible_p(product.get_mpz_t(), sum.get_mpz_t())) {
        hits.push_back({r, n});
      }
    }
    if (r == INT64_MAX) break;
  }
  return hits;
}

std::optional<std::int64_t> translate_search(const IntSet& f, std::int64_t m) {
  if (f.empty() || !is_complete(f)) {
    throw Error(ErrorKind::NotComplete, "the set to translate is not complete");
  }
  for (std::int64_t s = 1; s < m; ++s) {
    if (is_complete(translate(f, s))) return s;
  }
  return std::nullopt;
}

}  // namespace cset
