#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "cset/algebra.hpp"
#include "cset/census.hpp"
#include "cset/conjectures.hpp"
#include "cset/core.hpp"
#include "cset/error.hpp"

namespace cset::cli {
namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view token, std::string_view literal) {
  token = trim(token);
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError("invalid integer '" + std::string(token) + "' in set literal '" +
                     std::string(literal) + "'");
  }
  return value;
}

// int(,int)* with blanks around commas tolerated.
std::vector<std::int64_t> parse_set_literal(std::string_view literal) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = literal.find(',', start);
    values.push_back(parse_int(literal.substr(start, comma - start), literal));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

IntSet parse_set(const std::string& literal) {
  return make_set(parse_set_literal(literal));
}

json to_json(const IntSet& a) {
  return json(std::vector<std::int64_t>(a.begin(), a.end()));
}

json to_json(const MultisetAggregate& m) {
  json j{{"count", m.count},
         {"total", m.total},
         {"product_is_zero", m.product_is_zero},
         {"divisible", m.divisible()}};
  j["product_residue"] = m.product_residue ? json(*m.product_residue) : json(nullptr);
  j["quotient"] = m.quotient ? json(m.quotient->get_str()) : json(nullptr);
  return j;
}

json to_json(const TheoremReport& r) {
  json j{{"theorem", to_string(r.theorem)},
         {"condition_met", r.condition_met},
         {"condition_detail", r.condition_detail},
         {"constructed_complete", r.constructed_complete}};
  j["parameter"] = r.parameter ? json(*r.parameter) : json(nullptr);
  j["index_pair"] = r.index_pair ? json{r.index_pair->first, r.index_pair->second}
                                 : json(nullptr);
  j["constructed_set"] = r.constructed_set ? to_json(*r.constructed_set) : json(nullptr);
  j["set_complete"] = r.set_complete ? json(*r.set_complete) : json(nullptr);
  j["multiset"] = r.multiset ? to_json(*r.multiset) : json(nullptr);
  return j;
}

json to_json(const PrimeFinding& f) {
  return json{{"n", f.n},
              {"primes", to_json(f.primes)},
              {"sum", f.sum},
              {"is_complete", f.is_complete},
              {"sum_is_prime", f.sum_is_prime},
              {"omega_sum", f.omega_sum},
              {"holds", f.holds}};
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// Writes documents as single lines so streams compose in pipelines.
class Emitter {
 public:
  Emitter(std::ostream& out, std::string command)
      : out_(out), command_(std::move(command)) {}

  void payload(json body) const {
    json doc{{"schema_version", kSchemaVersion},
             {"command", command_},
             {"payload", std::move(body)}};
    out_ << doc.dump() << '\n';
  }

  void error(const Error& e) const {
    json doc{{"schema_version", kSchemaVersion},
             {"command", command_},
             {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    out_ << doc.dump() << '\n';
  }

  std::ostream& raw() const { return out_; }

 private:
  std::ostream& out_;
  std::string command_;
};

enum class Format { json, csv };

void add_format_option(CLI::App& cmd, Format& format) {
  cmd.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}))
      ->default_str("json");
}

void add_threads_option(CLI::App& cmd, unsigned& threads) {
  cmd.add_option("--threads", threads, "Worker count (overrides CSET_THREADS)")
      ->check(CLI::PositiveNumber);
}

// The command that ran, filled in by each subcommand's callback.
struct Invocation {
  std::string name;
  std::function<void(const Emitter&)> body;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Completeness of finite integer sets: product divisible by sum"};
  app.name("cset");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Invocation inv;
  auto invoke = [&inv](std::string name, std::function<void(const Emitter&)> body) {
    inv.name = std::move(name);
    inv.body = std::move(body);
  };

  unsigned threads = default_worker_count();
  Format format = Format::json;

  // check
  std::string check_set;
  auto* check = app.add_subcommand("check", "Decide completeness and print a certificate");
  check->add_option("set", check_set, "Comma-separated integers, e.g. 3,5,7")->required();
  check->callback([&] {
    invoke("check", [&](const Emitter& em) {
      const Certificate cert = certificate(parse_set(check_set));
      json p{{"elements", to_json(cert.set)},
             {"size", cert.set.size()},
             {"sum", cert.sum},
             {"complete", cert.witness.has_value()}};
      p["witness"] = cert.witness ? json(cert.witness->get_str()) : json(nullptr);
      p["residue"] = cert.residue ? json(*cert.residue) : json(nullptr);
      em.payload(std::move(p));
    });
  });

  // normal-form
  std::string nf_set;
  auto* nf = app.add_subcommand("normal-form", "Translate and rescale a set to start at 0");
  nf->add_option("set", nf_set, "Comma-separated integers")->required();
  nf->callback([&] {
    invoke("normal-form", [&](const Emitter& em) {
      const NormalFormResult r = normal_form(parse_set(nf_set));
      em.payload({{"original", to_json(r.original)},
                  {"d", r.d},
                  {"normalized", to_json(r.normalized)},
                  {"normalized_complete", is_complete(r.normalized)}});
    });
  });

  // census
  int census_n = 0;
  int census_min = 2;
  bool histogram = false;
  auto* census_cmd = app.add_subcommand("census", "Count complete subsets of {1..N}");
  census_cmd->add_option("--n", census_n, "Upper end of the interval (1..30)")->required();
  census_cmd->add_option("--min-size", census_min, "Smallest subset size counted")
      ->check(CLI::PositiveNumber);
  census_cmd->add_flag("--histogram", histogram, "Add the per-size table to CSV output");
  add_format_option(*census_cmd, format);
  add_threads_option(*census_cmd, threads);
  census_cmd->callback([&] {
    invoke("census", [&](const Emitter& em) {
      const CensusReport r = census(census_n, census_min, threads);
      if (format == Format::csv) {
        auto& os = em.raw();
        os << "N,min_size,total,ap_lower_bound\n"
           << r.n << ',' << r.min_size << ',' << r.total << ',' << r.ap_lower_bound << '\n';
        if (histogram) {
          os << "size,count\n";
          for (auto [size, count] : r.by_size) os << size << ',' << count << '\n';
        }
        return;
      }
      json by_size = json::array();
      for (auto [size, count] : r.by_size) by_size.push_back({{"size", size}, {"count", count}});
      em.payload({{"N", r.n},
                  {"min_size", r.min_size},
                  {"total", r.total},
                  {"by_size", std::move(by_size)},
                  {"ap_lower_bound", r.ap_lower_bound},
                  {"singletons_counted", r.min_size <= 1},
                  {"worker_count", r.worker_count},
                  {"elapsed_ms", r.elapsed.count()}});
    });
  });

  // enumerate
  int enum_n = 0;
  int enum_min = 2;
  std::optional<int> enum_max;
  auto* enum_cmd = app.add_subcommand("enumerate", "Stream complete subsets of {1..N}");
  enum_cmd->add_option("--n", enum_n, "Upper end of the interval (1..30)")->required();
  enum_cmd->add_option("--min-size", enum_min, "Smallest size listed")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--max-size", enum_max, "Largest size listed (default N)");
  add_format_option(*enum_cmd, format);
  add_threads_option(*enum_cmd, threads);
  enum_cmd->callback([&] {
    invoke("enumerate", [&](const Emitter& em) {
      const int max_size = enum_max.value_or(enum_n);
      if (format == Format::csv) em.raw() << "size,elements\n";
      const std::uint64_t count = enumerate_complete(
          enum_n, enum_min, max_size,
          [&](const IntSet& s) {
            if (format == Format::csv) {
              em.raw() << s.size() << ',';
              for (std::size_t i = 0; i < s.size(); ++i) em.raw() << (i ? " " : "") << s[i];
              em.raw() << '\n';
            } else {
              em.payload({{"kind", "set"}, {"elements", to_json(s)}});
            }
          },
          threads);
      if (format == Format::json) {
        em.payload({{"kind", "summary"},
                    {"N", enum_n},
                    {"min_size", enum_min},
                    {"max_size", max_size},
                    {"count", count}});
      }
    });
  });

  // ap-bound
  std::uint64_t bound_n = 0;
  auto* bound_cmd = app.add_subcommand("ap-bound", "Count odd-length homogeneous progressions in [1,N]");
  bound_cmd->add_option("--n", bound_n, "Upper end of the interval")->required();
  add_format_option(*bound_cmd, format);
  bound_cmd->callback([&] {
    invoke("ap-bound", [&](const Emitter& em) {
      const std::uint64_t bound = ap_lower_bound(bound_n);
      if (format == Format::csv) {
        em.raw() << "N,ap_lower_bound\n" << bound_n << ',' << bound << '\n';
        return;
      }
      em.payload({{"N", bound_n}, {"ap_lower_bound", bound}});
    });
  });

  // growth
  std::string growth_ns;
  int growth_exact = 20;
  int growth_min = 2;
  auto* growth_cmd = app.add_subcommand("growth", "Compare counts with N log N and N log N log log N");
  growth_cmd->add_option("--ns", growth_ns, "Ascending comma-separated N values")->required();
  growth_cmd->add_option("--exact-up-to", growth_exact, "Exact census for N up to this (max 30)");
  growth_cmd->add_option("--min-size", growth_min, "Smallest subset size counted")
      ->check(CLI::PositiveNumber);
  add_format_option(*growth_cmd, format);
  add_threads_option(*growth_cmd, threads);
  growth_cmd->callback([&] {
    invoke("growth", [&](const Emitter& em) {
      std::vector<std::uint64_t> ns;
      for (std::int64_t v : parse_set_literal(growth_ns)) {
        if (v < 1) throw UsageError("N values must be positive");
        ns.push_back(static_cast<std::uint64_t>(v));
      }
      const auto rows = growth_table(ns, growth_exact, growth_min, threads);
      auto flavor = [](GrowthFlavor f) { return f == GrowthFlavor::exact ? "exact" : "ap_bound"; };
      if (format == Format::csv) {
        auto& os = em.raw();
        os << "N,flavor,value,nlogn,nloglog,ratio_lower,ratio_upper\n";
        for (const GrowthRow& r : rows) {
          os << r.n << ',' << flavor(r.flavor) << ',' << r.value << ','
             << format_double(r.nlogn) << ',' << format_double(r.nloglog) << ','
             << (r.ratio_lower ? format_double(*r.ratio_lower) : "") << ','
             << (r.ratio_upper ? format_double(*r.ratio_upper) : "") << '\n';
        }
        return;
      }
      json list = json::array();
      for (const GrowthRow& r : rows) {
        json row{{"N", r.n},
                 {"flavor", flavor(r.flavor)},
                 {"value", r.value},
                 {"nlogn", r.nlogn},
                 {"nloglog", r.nloglog}};
        row["ratio_lower"] = r.ratio_lower ? json(*r.ratio_lower) : json(nullptr);
        row["ratio_upper"] = r.ratio_upper ? json(*r.ratio_upper) : json(nullptr);
        list.push_back(std::move(row));
      }
      em.payload({{"min_size", growth_min}, {"rows", std::move(list)}});
    });
  });

  // theorem <part>
  auto* theorem = app.add_subcommand("theorem", "Check a closure theorem on concrete sets");
  theorem->require_subcommand(1);
  std::string th_a;
  std::string th_b;
  std::int64_t th_param = 0;
  auto theorem_part = [&](const char* name, const char* alias, const char* help) {
    auto* sub = theorem->add_subcommand(name, help);
    sub->alias(alias);
    sub->add_option("set", th_a, "Comma-separated integers")->required();
    return sub;
  };
  auto emit_theorem = [&](const char* name, std::function<TheoremReport()> check_fn) {
    invoke(std::string("theorem ") + name,
           [check_fn](const Emitter& em) { em.payload(to_json(check_fn())); });
  };

  auto* th_prod = theorem_part("prodset", "i", "Product set of two complete sets");
  th_prod->add_option("other", th_b, "Second set")->required();
  th_prod->callback([&] {
    emit_theorem("prodset", [&] { return check_prodset_theorem(parse_set(th_a), parse_set(th_b)); });
  });
  auto* th_union = theorem_part("union", "ii", "Union under a_i*b_j = t*(a_i+b_j)");
  th_union->add_option("other", th_b, "Second set")->required();
  th_union->callback([&] {
    emit_theorem("union", [&] { return check_union_t_condition(parse_set(th_a), parse_set(th_b)); });
  });
  auto* th_aug = theorem_part("augment", "iii", "Union with a disjoint zero-sum set");
  th_aug->add_option("zero-sum-set", th_b, "Set summing to zero")->required();
  th_aug->callback([&] {
    emit_theorem("augment", [&] { return augment_zero_sum(parse_set(th_a), parse_set(th_b)); });
  });
  auto* th_scaled = theorem_part("scaled-difference", "iv", "B = t * A");
  th_scaled->add_option("--t", th_param, "Nonzero multiplier")->required();
  th_scaled->callback([&] {
    emit_theorem("scaled-difference",
                 [&] { return check_scaled_difference(parse_set(th_a), th_param); });
  });
  auto* th_sum = theorem_part("sumset2", "v", "Two-fold sumset");
  th_sum->callback([&] {
    emit_theorem("sumset2", [&] { return check_sumset2_theorem(parse_set(th_a)); });
  });
  auto* th_scale = theorem_part("scale", "vi", "q * A");
  th_scale->add_option("--q", th_param, "Nonzero scale factor")->required();
  th_scale->callback([&] {
    emit_theorem("scale", [&] { return check_scalar_theorem(parse_set(th_a), th_param); });
  });

  // conjecture <name>
  auto* conj = app.add_subcommand("conjecture", "Scan open conjectures and questions");
  conj->require_subcommand(1);

  std::uint64_t primes_max_n = 0;
  bool include_even = false;
  auto* c_primes = conj->add_subcommand("primes", "First n odd primes: complete, prime sum, or omega(sum) = 2");
  c_primes->add_option("--max-n", primes_max_n, "Largest n scanned")->required()->check(CLI::PositiveNumber);
  c_primes->add_flag("--include-even", include_even, "Also scan even n");
  c_primes->callback([&] {
    invoke("conjecture primes", [&](const Emitter& em) {
      const auto findings = scan_prime_conjecture(primes_max_n, include_even);
      std::vector<std::uint64_t> violations;
      for (const PrimeFinding& f : findings) {
        if (!f.holds) violations.push_back(f.n);
      }
      // violations first, then the rest in n order
      for (int pass = 0; pass < 2; ++pass) {
        for (const PrimeFinding& f : findings) {
          if (f.holds == (pass == 0)) continue;
          json p = to_json(f);
          p["kind"] = "finding";
          em.payload(std::move(p));
        }
      }
      em.payload({{"kind", "summary"},
                  {"findings", findings.size()},
                  {"holds", findings.size() - violations.size()},
                  {"violations", violations}});
    });
  });

  std::string ext_set;
  std::uint64_t ext_bound = 100;
  unsigned ext_max_added = 1;
  auto* c_extend = conj->add_subcommand("extend", "Complete a set of positive integers with new ones");
  c_extend->add_option("--set", ext_set, "Base set")->required();
  c_extend->add_option("--bound", ext_bound, "Largest integer that may be added");
  c_extend->add_option("--max-added", ext_max_added, "Most integers added")->check(CLI::PositiveNumber);
  c_extend->callback([&] {
    invoke("conjecture extend", [&](const Emitter& em) {
      const IntSet base = parse_set(ext_set);
      const auto result = complete_extension(base, ext_bound, ext_max_added);
      json p{{"kind", "finding"},
             {"base", to_json(base)},
             {"search_bound", ext_bound},
             {"max_added", ext_max_added},
             {"found", result.has_value()}};
      p["added"] = result ? to_json(result->added) : json(nullptr);
      p["combined_complete"] = result ? json(result->combined_complete) : json(nullptr);
      em.payload(std::move(p));
      em.payload({{"kind", "summary"}, {"findings", result ? 1 : 0}});
    });
  });

  std::int64_t geo_rmin = -10;
  std::int64_t geo_rmax = 10;
  unsigned geo_nmax = 12;
  auto* c_geo = conj->add_subcommand("geometric", "Complete sets {r, r^2, ..., r^n}");
  c_geo->add_option("--r-min", geo_rmin, "Smallest ratio");
  c_geo->add_option("--r-max", geo_rmax, "Largest ratio");
  c_geo->add_option("--n-max", geo_nmax, "Longest progression");
  c_geo->callback([&] {
    invoke("conjecture geometric", [&](const Emitter& em) {
      const auto hits = geometric_search(geo_rmin, geo_rmax, geo_nmax);
      for (const GeometricHit& h : hits) em.payload({{"kind", "finding"}, {"r", h.r}, {"n", h.n}});
      em.payload({{"kind", "summary"},
                  {"r_min", geo_rmin},
                  {"r_max", geo_rmax},
                  {"n_max", geo_nmax},
                  {"findings", hits.size()}});
    });
  });

  std::string tr_set;
  std::int64_t tr_max = 0;
  auto* c_tr = conj->add_subcommand("translate", "Smallest s < M with F + s complete");
  c_tr->add_option("--set", tr_set, "A complete set")->required();
  c_tr->add_option("--max", tr_max, "Exclusive upper bound M for s")->required();
  c_tr->callback([&] {
    invoke("conjecture translate", [&](const Emitter& em) {
      const IntSet f = parse_set(tr_set);
      const auto s = translate_search(f, tr_max);
      json p{{"kind", "finding"}, {"set", to_json(f)}, {"max", tr_max}, {"found", s.has_value()}};
      p["s"] = s ? json(*s) : json(nullptr);
      p["translated"] = s ? to_json(translate(f, *s)) : json(nullptr);
      em.payload(std::move(p));
      em.payload({{"kind", "summary"}, {"findings", s ? 1 : 0}});
    });
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Emitter emitter(out, inv.name);
  try {
    inv.body(emitter);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    emitter.error(e);
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace cset::cli
