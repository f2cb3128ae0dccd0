// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cset/algebra.hpp"
#include "cset/census.hpp"
#include "cset/conjectures.hpp"
#include "cset/core.hpp"
#include "oracle.hpp"

namespace {

using namespace cset;
using V = std::vector<std::int64_t>;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

V elems(const IntSet& a) { return {a.begin(), a.end()}; }

void example_sets(Check& c) {
  const std::vector<V> complete{{3, 5, 7},  {-2, 5, 3, -1},       {1, 3, 2}, {3, 7, 11},
                                {2, 4, 6},  {7, 14, 21, 28, 35}, {3, 5, 12}};
  const std::vector<V> incomplete{{3, 7, 9, 4, 2}, {7, 11, 13, 15}, {1, 18, 17, 3}};
  for (const V& s : complete) c.expect(is_complete(make_set(s)), "complete set misclassified");
  for (const V& s : incomplete) c.expect(!is_complete(make_set(s)), "incomplete set misclassified");
}

void progression_property(Check& c) {
  for (std::int64_t d = -20; d <= 20; ++d) {
    if (d == 0) continue;
    for (std::uint64_t n = 1; n <= 99; n += 2) {
      const Certificate cert = certificate(make_homogeneous_ap(d, n));
      if (!cert.witness) {
        c.expect(false, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " not complete");
        return;
      }
      if (n < 3) continue;
      const oracle::BigInt b = oracle::progression_witness(d, n);
      V members = elems(make_homogeneous_ap(d, n));
      c.expect(b * cert.sum == oracle::product(members),
               "formula witness fails for d=" + std::to_string(d) + " n=" + std::to_string(n));
      c.expect(oracle::BigInt(cert.witness->get_str()) == b, "certificate differs from formula");
    }
  }
}

void example_interval_ten(Check& c) {
  c.expect(ap_lower_bound(10) == 7, "ap_lower_bound(10) != 7");
  std::set<V> found;
  enumerate_complete(10, 3, 3, [&](const IntSet& s) { found.insert(elems(s)); });
  for (const V& s : {V{1, 2, 3}, V{2, 4, 6}, V{3, 6, 9}, V{3, 5, 7}, V{2, 5, 7}, V{2, 3, 5}}) {
    c.expect(found.count(s) == 1, "missing size-3 set");
  }
  const auto total = census(10, 2).total;
  c.expect(total >= 10, "census(10, 2) < 10");
  c.why << (c.ok ? "C(10) = " + std::to_string(total) : "");
}

void oracle_equivalence(Check& c) {
  std::mt19937_64 rng(1234567);
  int agreed = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const V s = oracle::random_set(rng, 8, -50, 50);
    if (is_complete(make_set(s)) == oracle::is_complete(s)) ++agreed;
  }
  c.expect(agreed == 10000, std::to_string(10000 - agreed) + " disagreements");
}

void census_determinism(Check& c) {
  for (int n : {10, 16, 20}) {
    const CensusReport one = census(n, 2, 1);
    for (unsigned w : {2u, 8u}) {
      const CensusReport many = census(n, 2, w);
      c.expect(many.total == one.total && many.by_size == one.by_size,
               "worker count changes census(" + std::to_string(n) + ")");
    }
  }
  for (int n = 1; n <= 16; ++n) {
    const auto naive = oracle::naive_census(n);
    std::uint64_t expected = 0;
    for (int k = 2; k <= n; ++k) expected += naive[k];
    c.expect(census(n, 2).total == expected, "census(" + std::to_string(n) + ") != naive count");
  }
}

void growth_direction(Check& c) {
  for (int n = 1; n <= 22; ++n) {
    c.expect(census(n, 3).total >= ap_lower_bound(n),
             "census(" + std::to_string(n) + ", 3) below progression bound");
  }
  double previous = 0.0;
  for (std::uint64_t n : {1000ull, 10000ull, 100000ull, 1000000ull}) {
    const double x = static_cast<double>(n);
    const double ratio = static_cast<double>(ap_lower_bound(n)) / (x * std::log(x));
    c.expect(ratio >= 0.40 && ratio <= 0.50, "ratio out of [0.40, 0.50] at N=" + std::to_string(n));
    c.expect(ratio >= previous, "ratio decreased at N=" + std::to_string(n));
    previous = ratio;
    if (n == 1000000ull && c.ok) c.why << "ratio(1e6) = " << ratio;
  }
}

bool complete_nonzero_sum(const V& v) { return oracle::is_complete(v) && oracle::sum(v) != 0; }

void closure_theorems(Check& c) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const V a = oracle::random_set_where(rng, 5, -30, 30, complete_nonzero_sum);
    const V b = oracle::random_set_where(rng, 5, -30, 30, complete_nonzero_sum);
    c.expect(check_prodset_theorem(make_set(a), make_set(b)).constructed_complete,
             "prodset multiset not divisible");
  }
  for (int i = 0; i < 500; ++i) {
    const IntSet base = make_set(oracle::random_set_where(rng, 6, -40, 40, oracle::is_complete));
    V h;
    while (true) {
      h = oracle::random_set(rng, 4, -60, 60);
      const auto s = static_cast<std::int64_t>(oracle::sum(h));
      if (s != 0) h.push_back(-s);
      const IntSet hs = IntSet::collect(h);
      if (hs.size() == h.size() && disjoint(base, hs)) break;
    }
    c.expect(augment_zero_sum(base, make_set(h)).constructed_complete, "zero-sum augment failed");
  }
  std::uniform_int_distribution<std::int64_t> q_dist(1, 500);
  for (int i = 0; i < 500; ++i) {
    const IntSet a = make_set(oracle::random_set_where(rng, 7, -100, 100, oracle::is_complete));
    const std::int64_t q = q_dist(rng) * (i % 2 ? -1 : 1);
    c.expect(is_complete(scale(q, a)), "scaling lost completeness");
  }
  int met = 0;
  enumerate_complete(12, 1, 4, [&](const IntSet& a) {
    const TheoremReport r = check_sumset2_theorem(a);
    if (!r.condition_met) return;
    ++met;
    c.expect(r.constructed_complete && oracle::is_complete(elems(*r.constructed_set)),
             "sumset conclusion fails");
  });
  c.expect(met > 0, "no sumset condition met");
  if (c.ok) c.why << met << " sumset cases";
}

void prime_scan(Check& c) {
  const auto findings = scan_prime_conjecture(201);
  c.expect(findings.size() == 101, "expected 101 odd n");
  std::vector<std::uint64_t> violations;
  for (const PrimeFinding& f : findings) {
    c.expect(f.n % 2 == 1 && f.primes.size() == f.n, "malformed finding");
    c.expect(f.sum == static_cast<std::int64_t>(oracle::sum(elems(f.primes))), "sum mismatch");
    c.expect(f.is_complete == oracle::is_complete(elems(f.primes)), "completeness mismatch");
    c.expect(f.omega_sum == omega(f.sum), "omega mismatch");
    c.expect(f.sum_is_prime == is_prime(static_cast<std::uint64_t>(f.sum)), "primality mismatch");
    c.expect(f.holds == (f.is_complete || f.sum_is_prime || f.omega_sum == 2), "holds mismatch");
    if (!f.holds) violations.push_back(f.n);
  }
  if (c.ok) {
    c.why << violations.size() << " violating n:";
    for (auto n : violations) c.why << ' ' << n;
  }
}

void search_answers(Check& c) {
  const auto a = complete_extension(make_set({3, 7, 9, 4, 2}), 100, 1);
  c.expect(a && elems(a->added) == V{5}, "extension of {3,7,9,4,2} != {5}");
  const auto b = complete_extension(make_set({1, 18, 17, 3}), 100, 1);
  c.expect(b && elems(b->added) == V{12}, "extension of {1,18,17,3} != {12}");
  const auto s = translate_search(make_set({3, 5, 7}), 10);
  c.expect(s == 3, "translate_search({3,5,7}, 10) = " + (s ? std::to_string(*s) : "none") +
                       ", expected 3");
  const auto hits = geometric_search(-10, 10, 12);
  bool minus_two = false;
  for (const GeometricHit& h : hits) {
    minus_two = minus_two || (h.r == -2 && h.n == 2);
    c.expect(h.r != 2, "r = 2 reported");
  }
  c.expect(minus_two, "(-2, 2) missing");
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(CSET_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r{-1, {}};
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void cli_contract(Check& c) {
  const Run check = run_cli("check 3,5,7");
  c.expect(check.code == 0, "check exit code");
  c.expect(nlohmann::json::parse(check.out)["payload"]["witness"] == "7", "witness != \"7\"");

  const Run csv = run_cli("census --n 3 --min-size 2 --format csv");
  c.expect(csv.code == 0, "census exit code");
  c.expect(csv.out == "N,min_size,total,ap_lower_bound\n3,2,1,1\n", "CSV not byte-exact");

  const Run ten = run_cli("census --n 10");
  c.expect(nlohmann::json::parse(ten.out)["payload"]["ap_lower_bound"] == 7, "ap bound in census");

  const Run dup = run_cli("check 5,5");
  c.expect(dup.code == 1, "duplicate should exit 1");
  c.expect(nlohmann::json::parse(dup.out)["error"]["kind"] == "DuplicateElement", "error body");
  c.expect(run_cli("census --n 31").code == 1, "NTooLarge should exit 1");
  c.expect(run_cli("check 3,abc").code == 2, "parse failure should exit 2");
  c.expect(run_cli("census").code == 2, "missing flag should exit 2");
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1 example sets classify exactly", 1, example_sets},
      {"AC2 odd homogeneous progressions complete, formula witness", 30, progression_property},
      {"AC3 interval [1,10] example reproduced", 1, example_interval_ten},
      {"AC4 predicate agrees with big-integer oracle", 60, oracle_equivalence},
      {"AC5 census deterministic and matches naive count", 60, census_determinism},
      {"AC6 census above progression bound, ratio in [0.40,0.50]", 60, growth_direction},
      {"AC7 closure theorem checkers", 60, closure_theorems},
      {"AC8 first-odd-primes scan well formed", 30, prime_scan},
      {"AC9 search answers", 5, search_answers},
      {"AC10 CLI contract", 1, cli_contract},
  };
  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.why << "exception: " << e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > cr.limit_seconds) {
      check.ok = false;
      check.why << " (over " << cr.limit_seconds << " s budget)";
    }
    failures += !check.ok;
    std::printf("[%s] %s  %.3f s  %s\n", check.ok ? "PASS" : "FAIL", cr.name, seconds,
                check.why.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
