#include "cset/census.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "cset/error.hpp"
#include "parallel.hpp"

namespace cset {
namespace {

// Subsets of {1..n} are complete iff, for every prime p dividing the sum,
// the p-adic valuation of the product reaches that of the sum. Valuations
// add over disjoint unions, so each subset packs them into one word with a
// guard bit above every field: the subtraction (vals | guards) - need keeps
// a field's guard bit set exactly when that field's valuation suffices.
// One extra field flags sums with a prime factor above n, which no product
// of elements of {1..n} can absorb.
class ValuationKernel {
 public:
  explicit ValuationKernel(int n) : n_(n) {
    const int max_sum = n * (n + 1) / 2;
    std::vector<int> primes;
    for (int p = 2; p <= n; ++p) {
      bool prime = true;
      for (int q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
      if (prime) primes.push_back(p);
    }

    std::vector<int> offsets;
    int bit = 0;
    for (int p : primes) {
      int max_val = 0;
      for (int k = 1; k <= n; ++k) max_val += valuation(k, p);
      int max_need = 0;
      for (int pk = p; pk <= max_sum; pk *= p) ++max_need;
      int width = std::bit_width(static_cast<unsigned>(std::max(max_val, max_need)));
      offsets.push_back(bit);
      guards_ |= std::uint64_t{1} << (bit + width);
      bit += width + 1;
    }
    const int unreachable_bit = bit;
    guards_ |= std::uint64_t{1} << (unreachable_bit + 1);
    if (unreachable_bit + 2 > 64) {
      throw Error(ErrorKind::NTooLarge, "valuation fields exceed one word");
    }

    element_vals_.assign(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < primes.size(); ++i) {
        element_vals_[k] += std::uint64_t(valuation(k, primes[i])) << offsets[i];
      }
    }

    need_.assign(max_sum + 1, 0);
    need_[0] = std::uint64_t{1} << unreachable_bit;  // empty subset
    for (int s = 1; s <= max_sum; ++s) {
      int rest = s;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        int v = 0;
        while (rest % primes[i] == 0) rest /= primes[i], ++v;
        need_[s] += std::uint64_t(v) << offsets[i];
      }
      if (rest != 1) need_[s] |= std::uint64_t{1} << unreachable_bit;
    }
  }

  int n() const noexcept { return n_; }
  std::uint64_t element_vals(int k) const noexcept { return element_vals_[k]; }

  bool complete(int sum, std::uint64_t vals) const noexcept {
    return (((vals | guards_) - need_[sum]) & guards_) == guards_;
  }

 private:
  static int valuation(int k, int p) {
    int v = 0;
    while (k % p == 0) k /= p, ++v;
    return v;
  }

  int n_;
  std::uint64_t guards_ = 0;
  std::vector<std::uint64_t> element_vals_;
  std::vector<std::uint64_t> need_;
};

// Masks are split as hi << low_bits | lo. The low half is tabulated once;
// a block is a contiguous range of hi values, so blocks cover contiguous
// mask ranges in ascending order.
class SubsetSpace {
 public:
  explicit SubsetSpace(const ValuationKernel& kernel)
      : kernel_(kernel), low_bits_(std::min(kernel.n(), 15)) {
    const std::size_t size = std::size_t{1} << low_bits_;
    low_sum_.assign(size, 0);
    low_vals_.assign(size, 0);
    low_count_.assign(size, 0);
    for (std::size_t lo = 1; lo < size; ++lo) {
      const int bit = std::countr_zero(lo);
      const std::size_t prev = lo & (lo - 1);
      low_sum_[lo] = static_cast<std::uint16_t>(low_sum_[prev] + bit + 1);
      low_vals_[lo] = low_vals_[prev] + kernel.element_vals(bit + 1);
      low_count_[lo] = static_cast<std::uint8_t>(low_count_[prev] + 1);
    }
    const int high_bits = kernel.n() - low_bits_;
    high_count_ = std::size_t{1} << high_bits;
    his_per_block_ = std::max<std::size_t>(1, high_count_ / 256);
  }

  std::size_t block_count() const noexcept {
    return (high_count_ + his_per_block_ - 1) / his_per_block_;
  }

  // Calls visit(mask, size) for every complete subset in block order.
  template <typename Visit>
  void scan_block(std::size_t block, Visit&& visit) const {
    const std::size_t hi_begin = block * his_per_block_;
    const std::size_t hi_end = std::min(high_count_, hi_begin + his_per_block_);
    const std::size_t low_size = low_sum_.size();
    for (std::size_t hi = hi_begin; hi < hi_end; ++hi) {
      int hi_sum = 0;
      int hi_count = 0;
      std::uint64_t hi_vals = 0;
      for (std::size_t rest = hi; rest; rest &= rest - 1) {
        const int k = std::countr_zero(rest) + low_bits_ + 1;
        hi_sum += k;
        hi_vals += kernel_.element_vals(k);
        ++hi_count;
      }
      const std::uint64_t base = static_cast<std::uint64_t>(hi) << low_bits_;
      for (std::size_t lo = 0; lo < low_size; ++lo) {
        if (kernel_.complete(hi_sum + low_sum_[lo], hi_vals + low_vals_[lo])) {
          visit(base | lo, hi_count + low_count_[lo]);
        }
      }
    }
  }

 private:
  const ValuationKernel& kernel_;
  int low_bits_;
  std::size_t high_count_ = 1;
  std::size_t his_per_block_ = 1;
  std::vector<std::uint16_t> low_sum_;
  std::vector<std::uint64_t> low_vals_;
  std::vector<std::uint8_t> low_count_;
};

void validate(int n, int min_size) {
  if (n > kMaxCensusN) {
    throw Error(ErrorKind::NTooLarge, "N = " + std::to_string(n) +
                                          " exceeds the exhaustive cap of " +
                                          std::to_string(kMaxCensusN));
  }
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "N must be at least 1");
  if (min_size < 1) throw Error(ErrorKind::InvalidArgument, "min_size must be at least 1");
}

IntSet mask_to_set(std::uint64_t mask) {
  std::vector<std::int64_t> elems;
  for (; mask; mask &= mask - 1) elems.push_back(std::countr_zero(mask) + 1);
  return IntSet::collect(std::move(elems));
}

}  // namespace

CensusReport census(int n, int min_size, unsigned workers) {
  validate(n, min_size);
  const auto start = std::chrono::steady_clock::now();
  workers = std::max(1u, workers);

  ValuationKernel kernel(n);
  SubsetSpace space(kernel);
  using Histogram = std::array<std::uint64_t, kMaxCensusN + 1>;
  std::vector<Histogram> partial(space.block_count(), Histogram{});
  detail::parallel_for(space.block_count(), workers, [&](std::size_t block) {
    Histogram& h = partial[block];
    space.scan_block(block, [&h](std::uint64_t, int size) { ++h[size]; });
  });

  CensusReport report;
  report.n = n;
  report.min_size = min_size;
  report.worker_count = workers;
  Histogram merged{};
  for (const Histogram& h : partial)
    for (std::size_t k = 0; k < h.size(); ++k) merged[k] += h[k];
  for (int k = min_size; k <= n; ++k) {
    report.by_size[k] = merged[k];
    report.total += merged[k];
  }
  report.ap_lower_bound = ap_lower_bound(static_cast<std::uint64_t>(n));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::uint64_t ap_lower_bound(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t j = 3; j <= n; j += 2) total += n / j;
  return total;
}

std::uint64_t enumerate_complete(int n, int min_size, int max_size,
                                 const SubsetSink& sink, unsigned workers) {
  validate(n, min_size);
  workers = std::max(1u, workers);
  if (max_size < min_size) return 0;

  ValuationKernel kernel(n);
  SubsetSpace space(kernel);
  const std::size_t blocks = space.block_count();
  const std::size_t wave = std::size_t{workers} * 4;
  std::uint64_t emitted = 0;
  std::vector<std::vector<std::uint64_t>> found(wave);
  for (std::size_t first = 0; first < blocks; first += wave) {
    const std::size_t count = std::min(wave, blocks - first);
    detail::parallel_for(count, workers, [&](std::size_t i) {
      found[i].clear();
      space.scan_block(first + i, [&](std::uint64_t mask, int size) {
        if (size >= min_size && size <= max_size) found[i].push_back(mask);
      });
    });
    for (std::size_t i = 0; i < count; ++i) {
      for (std::uint64_t mask : found[i]) {
        sink(mask_to_set(mask));
        ++emitted;
      }
    }
  }
  return emitted;
}

std::vector<GrowthRow> growth_table(std::span<const std::uint64_t> ns,
                                    int exact_up_to, int min_size,
                                    unsigned workers) {
  if (!std::is_sorted(ns.begin(), ns.end())) {
    throw Error(ErrorKind::InvalidArgument, "N values must be ascending");
  }
  std::vector<GrowthRow> rows;
  rows.reserve(ns.size());
  const int exact_cap = std::min(exact_up_to, kMaxCensusN);
  for (std::uint64_t n : ns) {
    GrowthRow row;
    row.n = n;
    if (n >= 1 && n <= static_cast<std::uint64_t>(std::max(exact_cap, 0))) {
      row.flavor = GrowthFlavor::exact;
      row.value = census(static_cast<int>(n), min_size, workers).total;
    } else {
      row.flavor = GrowthFlavor::ap_bound;
      row.value = ap_lower_bound(n);
    }
    const double x = static_cast<double>(n);
    const double ln = x > 0 ? std::log(x) : 0.0;
    row.nlogn = x * ln;
    row.nloglog = ln > 0 ? x * ln * std::log(ln) : 0.0;
    if (row.nlogn > 0) row.ratio_lower = static_cast<double>(row.value) / row.nlogn;
    if (row.nloglog > 0) row.ratio_upper = static_cast<double>(row.value) / row.nloglog;
    rows.push_back(row);
  }
  return rows;
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("CSET_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace cset
