// hcn: command-line front end for the champion enumerators and the
// inequality verifiers.
//
// Exit codes: 0 holds / complete, 1 counterexample found, 2 usage error or
// journal conflict, 3 undecided at the precision cap.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hcn/store.hpp"
#include "hcn/version.hpp"
#include "output.hpp"

namespace hcn::cli {
namespace {

constexpr int kExitHolds = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json results = Json::object();
  Table table;
  std::vector<PlotRow> plot;
  bool has_plot = false;
  int exit_code = kExitHolds;
};

struct Globals {
  bool json = false;
  bool csv = false;
  bool plot_data = false;
  int precision = static_cast<int>(kDefaultPrecision);
  unsigned threads = 1;
  std::string journal;
  bool journal_flag = false;
  bool resume = false;
  std::string cache;
  bool cache_flag = false;
};

int exit_for(VerdictState state) {
  switch (state) {
    case VerdictState::Holds: return kExitHolds;
    case VerdictState::Fails: return kExitCounterexample;
    case VerdictState::Undecided: return kExitUndecided;
  }
  return kExitUndecided;
}

Rational parse_rational(const std::string& text) {
  std::size_t dot = text.find('.');
  Rational q;
  if (dot == std::string::npos) {
    if (q.set_str(text, 10) != 0) throw UsageError("not a rational number: " + text);
  } else {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt num;
    if (digits.empty() || num.set_str(digits, 10) != 0) throw UsageError("not a decimal number: " + text);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    q = Rational(num, den);
  }
  q.canonicalize();
  return q;
}

FactoredNumber parse_n(const std::string& text) {
  try {
    return FactoredNumber::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid --n: ") + e.what());
  }
}

std::filesystem::path data_dir() {
  const char* env = std::getenv("HCN_DATA_DIR");
  std::filesystem::path dir = env && *env ? env : "hcn-data";
  std::filesystem::create_directories(dir);
  return dir;
}

std::optional<std::filesystem::path> journal_path(const Globals& g, const std::string& command) {
  if (!g.journal.empty()) return std::filesystem::path(g.journal);
  if (g.journal_flag || g.resume) return data_dir() / (command + ".journal");
  return std::nullopt;
}

std::optional<std::filesystem::path> cache_path(const Globals& g, const std::string& command) {
  if (!g.cache.empty()) return std::filesystem::path(g.cache);
  if (g.cache_flag) return data_dir() / (command + ".cache");
  return std::nullopt;
}

CheckOptions check_options(const Globals& g) {
  CheckOptions o;
  o.precision = g.precision;
  o.threads = g.threads;
  return o;
}

// Scans [lo, hi] in fixed blocks. With a journal, each finished block is
// appended; with --resume, blocks already journaled with the same span are
// reused instead of recomputed.
RangeCheckReport journaled_scan(const Globals& g, const std::string& command, const std::string& criterion,
                                std::uint64_t lo, std::uint64_t hi, std::uint64_t block,
                                const std::function<RangeCheckReport(std::uint64_t, std::uint64_t)>& scan) {
  if (block == 0) throw UsageError("--block must be positive");
  std::optional<Journal> journal;
  if (auto path = journal_path(g, command)) journal = Journal::open(*path);
  std::vector<RangeCheckReport> parts;
  for (std::uint64_t a = lo;; a += block) {
    std::uint64_t b = hi - a < block ? hi : a + block - 1;
    bool reused = false;
    if (journal) {
      const BigInt a_big(static_cast<unsigned long>(a));
      const BigInt b_big(static_cast<unsigned long>(b));
      for (const auto& e : journal->entries_for(criterion)) {
        if (e.hi < a_big || b_big < e.lo) continue;
        if (!g.resume) throw JournalConflictError("journal already covers part of this range; pass --resume");
        if (e.lo != a_big || e.hi != b_big) {
          throw JournalConflictError("journal span [" + e.lo.get_str() + ", " + e.hi.get_str() +
                                     "] does not match the block layout");
        }
        parts.push_back(report_from_entry(e));
        reused = true;
        break;
      }
    }
    if (!reused) {
      parts.push_back(scan(a, b));
      if (journal) journal->append(entry_from_report(parts.back()));
    }
    if (b == hi) break;
  }
  return merge_reports(parts);
}

void set_report(Outcome& out, const RangeCheckReport& report) {
  out.results = report_json(report);
  out.table = report_table(report);
  out.exit_code = exit_for(report.verdict.state);
}

void set_records(Outcome& out, const std::vector<ChampionRecord>& records) {
  Json list = Json::array();
  for (const auto& r : records) list.push_back(record_json(r));
  out.results = Json{{"count", std::to_string(records.size())}, {"records", list}};
  out.table = records_table(records);
}

void set_probe(Outcome& out, const LimsupProbe& probe) {
  out.results = probe_json(probe);
  out.table.columns = {"n", "factorization", "log_n_lo", "log_n_hi", "quantity_lo", "quantity_hi"};
  for (const auto& p : probe.points) {
    out.table.rows.push_back({p.n.value().get_str(), p.n.to_string(), lower_string(p.log_n), upper_string(p.log_n),
                              lower_string(p.quantity), upper_string(p.quantity)});
    out.plot.push_back({p.log_n.lo().to_string(17, MPFR_RNDN), lower_string(p.quantity), upper_string(p.quantity)});
  }
  out.has_plot = true;
}

std::vector<ChampionRecord> cached_or(const std::optional<std::filesystem::path>& path, ChampionKind kind,
                                      const Rational& s, std::size_t want,
                                      const std::function<std::vector<ChampionRecord>()>& compute) {
  if (path && std::filesystem::exists(*path)) {
    ChampionCache cache = cache_load(*path);
    if (cache.kind == kind && cache.s == s && cache.records.size() >= want) {
      cache.records.resize(want);
      return cache.records;
    }
  }
  std::vector<ChampionRecord> records = compute();
  if (path) cache_save(ChampionCache{kind, s, records}, *path);
  return records;
}

Json envelope(const std::string& command, const Json& parameters, const Json& results, int precision) {
  return Json{{"command", command},
              {"parameters", parameters},
              {"results", results},
              {"engine_version", kEngineVersion},
              {"precision", precision}};
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Champion numbers of the sigma function and rigorous checks of the Robin, Nicolas and related "
               "inequalities.",
               "hcn"};
  app.set_version_flag("--version", kEngineVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* json_flag = app.add_flag("--json", g.json, "Emit the JSON envelope");
  auto* csv_flag = app.add_flag("--csv", g.csv, "Emit CSV with a header row");
  auto* plot_flag = app.add_flag("--plot-data", g.plot_data, "Emit x,lo,hi triples (probes and mertens)");
  json_flag->excludes(csv_flag)->excludes(plot_flag);
  csv_flag->excludes(plot_flag);
  app.add_option("--precision", g.precision, "Starting working precision in bits")
      ->check(CLI::Range(32, static_cast<int>(kPrecisionCap)));
  app.add_option("--threads", g.threads, "Worker threads for range scans")->check(CLI::Range(1u, 256u));
  auto* journal_opt = app.add_option("--journal", g.journal, "Journal file (default $HCN_DATA_DIR/<command>.journal)")
                          ->expected(0, 1);
  app.add_flag_callback("--resume", [&] { g.resume = true; }, "Reuse journaled blocks");
  auto* cache_opt = app.add_option("--cache", g.cache, "Champion cache file (default $HCN_DATA_DIR/<command>.cache)")
                        ->expected(0, 1);

  Json params = Json::object();
  std::function<Outcome()> action;
  std::string command;

  auto param = [&](const std::string& key, const auto& value) {
    std::ostringstream ss;
    ss << value;
    params[key] = ss.str();
  };

  std::string n_text;
  std::uint64_t from = 0, to = 0, block = 10000, limit = 0, bound = 10000, count = 20, pmax = 100000;
  std::uint64_t max_pplus = 20000, prime_ceiling = 1000000, x_value = 0;
  std::string s_text = "1", eps_text, xs_text = "1000,10000,100000,1000000";

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n_text, "n in decimal or as 2^4*3^2*5")->required(); };

  auto* sigma_cmd = app.add_subcommand("sigma", "Sum of divisors of n");
  add_n(sigma_cmd);
  sigma_cmd->callback([&] {
    command = "sigma";
    param("n", n_text);
    action = [&] {
      FactoredNumber n = parse_n(n_text);
      Outcome out;
      out.results = Json{{"n", n.value().get_str()},
                         {"factorization", n.to_string()},
                         {"sigma", sigma(n).get_str()},
                         {"sigma_ratio", sigma_ratio(n).get_str()},
                         {"divisor_count", divisor_count(n).get_str()}};
      out.table.columns = {"n", "factorization", "sigma", "sigma_ratio", "divisor_count"};
      out.table.rows.push_back({n.value().get_str(), n.to_string(), sigma(n).get_str(), sigma_ratio(n).get_str(),
                                divisor_count(n).get_str()});
      return out;
    };
  });

  auto* phi_cmd = app.add_subcommand("phi", "Euler totient of n");
  add_n(phi_cmd);
  phi_cmd->callback([&] {
    command = "phi";
    param("n", n_text);
    action = [&] {
      FactoredNumber n = parse_n(n_text);
      Outcome out;
      out.results = Json{{"n", n.value().get_str()}, {"factorization", n.to_string()}, {"phi", phi(n).get_str()}};
      out.table.columns = {"n", "factorization", "phi"};
      out.table.rows.push_back({n.value().get_str(), n.to_string(), phi(n).get_str()});
      return out;
    };
  });

  auto* g_cmd = app.add_subcommand("g", "Gronwall quotient G(n) compared with e^gamma");
  add_n(g_cmd);
  g_cmd->callback([&] {
    command = "g";
    param("n", n_text);
    action = [&] {
      FactoredNumber n = parse_n(n_text);
      if (n.is_one()) throw UsageError("G(n) needs n >= 2");
      Interval gn = gronwall_G(n, g.precision);
      Interval eg = exp_gamma(g.precision);
      CriterionVerdict v = robin_check(n, check_options(g));
      Outcome out;
      out.results = Json{{"n", n.value().get_str()},
                         {"factorization", n.to_string()},
                         {"g", interval_json(gn)},
                         {"exp_gamma", interval_json(eg)},
                         {"relation", "G(n) < e^gamma"},
                         {"verdict", verdict_json(v)}};
      out.table.columns = {"n", "g_lo", "g_hi", "verdict", "margin_lo", "margin_hi"};
      out.table.rows.push_back({n.value().get_str(), lower_string(gn), upper_string(gn), to_string(v.state),
                                v.margin ? lower_string(*v.margin) : "", v.margin ? upper_string(*v.margin) : ""});
      out.exit_code = exit_for(v.state);
      return out;
    };
  });

  auto* sa_cmd = app.add_subcommand("sa", "Superabundant numbers up to a limit");
  sa_cmd->add_option("--limit", limit, "Upper limit")->required()->check(CLI::Range(1ull, 1'000'000'000'000ull));
  sa_cmd->callback([&] {
    command = "sa";
    param("limit", limit);
    action = [&] {
      Outcome out;
      std::vector<ChampionRecord> records = sa_enumerate(BigInt(std::to_string(limit)), g.precision);
      if (auto path = cache_path(g, command)) cache_save(ChampionCache{ChampionKind::SA, Rational(1), records}, *path);
      set_records(out, records);
      return out;
    };
  });

  auto* ca_cmd = app.add_subcommand("ca", "The first colossally abundant numbers");
  ca_cmd->add_option("--count", count, "Number of terms")->check(CLI::Range(1ull, 100000ull));
  ca_cmd->callback([&] {
    command = "ca";
    param("count", count);
    action = [&] {
      Outcome out;
      set_records(out, cached_or(cache_path(g, command), ChampionKind::CA, Rational(1), count,
                                 [&] { return ca_sequence(count, g.precision); }));
      return out;
    };
  });

  auto* shc_cmd = app.add_subcommand("shc", "Generalized superior highly composite number for (s, epsilon)");
  shc_cmd->add_option("--s", s_text, "Parameter s > 0 (rational, e.g. 1/2)");
  shc_cmd->add_option("--epsilon", eps_text, "Parameter epsilon > 0 (rational)")->required();
  shc_cmd->add_option("--prime-ceiling", prime_ceiling, "Largest prime sieved")
      ->check(CLI::Range(2ull, 100'000'000ull));
  shc_cmd->callback([&] {
    command = "shc";
    param("s", s_text);
    param("epsilon", eps_text);
    param("prime_ceiling", prime_ceiling);
    action = [&] {
      ShcParameter p{parse_rational(s_text), parse_rational(eps_text)};
      try {
        p.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      ShcResult r = shc_from_epsilon(p, prime_ceiling, ShcOptions{g.precision, kPrecisionCap});
      Interval product = sigma_product_check(r.champion, p.s, g.precision);
      Interval direct = sigma_minus_s_interval(r.champion.n, Interval::from_rational(p.s, g.precision));
      Json brackets = Json::array();
      for (const auto& x : r.x_brackets) brackets.push_back(interval_json(x));
      Outcome out;
      out.results = Json{{"champion", record_json(r.champion)},
                         {"x_brackets", brackets},
                         {"tie_neighbor", r.tie_neighbor ? record_json(*r.tie_neighbor) : Json(nullptr)},
                         {"sigma_minus_s_product", interval_json(product)},
                         {"sigma_minus_s_direct", interval_json(direct)},
                         {"product_consistent", product.intersects(direct)}};
      out.table = records_table({r.champion});
      if (!product.intersects(direct)) out.exit_code = kExitCounterexample;
      return out;
    };
  });

  auto* rr_cmd = app.add_subcommand("robin-range", "Exhaustive check of G(n) < e^gamma on [from, to]");
  rr_cmd->add_option("--from", from, "First n")->required()->check(CLI::Range(2ull, 10'000'000'000ull));
  rr_cmd->add_option("--to", to, "Last n")->required()->check(CLI::Range(2ull, 10'000'000'000ull));
  rr_cmd->add_option("--block", block, "Journal block size");
  rr_cmd->callback([&] {
    command = "robin-range";
    param("from", from);
    param("to", to);
    param("block", block);
    action = [&] {
      if (to < from) throw UsageError("--to must be >= --from");
      Outcome out;
      set_report(out, journaled_scan(g, command, "robin", from, to, block, [&](std::uint64_t a, std::uint64_t b) {
                   return robin_verify_range(a, b, check_options(g));
                 }));
      return out;
    };
  });

  auto* rc_cmd = app.add_subcommand("robin-ca", "G(N) < e^gamma along CA numbers N >= 55440 with P+(N) <= bound");
  rc_cmd->add_option("--max-pplus", max_pplus, "Largest prime factor allowed")
      ->check(CLI::Range(11ull, 10'000'000ull));
  rc_cmd->callback([&] {
    command = "robin-ca";
    param("max_pplus", max_pplus);
    action = [&] {
      Outcome out;
      set_report(out, robin_verify_ca(max_pplus, check_options(g)));
      return out;
    };
  });

  auto* nic_cmd = app.add_subcommand("nicolas", "p#/(log log p# phi(p#)) > e^gamma for primes 2 < p <= pmax");
  nic_cmd->add_option("--pmax", pmax, "Largest prime")->check(CLI::Range(3ull, 100'000'000ull));
  nic_cmd->callback([&] {
    command = "nicolas";
    param("pmax", pmax);
    action = [&] {
      Outcome out;
      set_report(out, nicolas_verify_upto(pmax, check_options(g)));
      return out;
    };
  });

  auto* sp_cmd = app.add_subcommand("sigma-phi", "6/pi^2 < (sigma(n)/n)(phi(n)/n) < 1 on [from, to]");
  from = 2;
  sp_cmd->add_option("--from", from, "First n")->check(CLI::Range(2ull, 10'000'000'000ull));
  sp_cmd->add_option("--to", to, "Last n")->required()->check(CLI::Range(2ull, 10'000'000'000ull));
  sp_cmd->add_option("--block", block, "Journal block size");
  sp_cmd->callback([&] {
    command = "sigma-phi";
    param("from", from);
    param("to", to);
    param("block", block);
    action = [&] {
      if (to < from) throw UsageError("--to must be >= --from");
      Outcome out;
      set_report(out, journaled_scan(g, command, "sigma-phi", from, to, block, [&](std::uint64_t a, std::uint64_t b) {
                   return sigma_phi_check(a, b, check_options(g));
                 }));
      return out;
    };
  });

  auto ga_options = [&] { return GaOptions{g.precision, kPrecisionCap}; };

  auto* ga1_cmd = app.add_subcommand("ga1", "Is n a GA1 number");
  add_n(ga1_cmd);
  ga1_cmd->callback([&] {
    command = "ga1";
    param("n", n_text);
    action = [&] {
      FactoredNumber n = parse_n(n_text);
      if (n.is_one()) throw UsageError("ga1 needs n >= 2");
      GaVerdict v = ga1_check(n, ga_options());
      Outcome out;
      out.results = ga_verdict_json(v);
      out.table = ga_table({v});
      if (v.ga1_state == VerdictState::Undecided) out.exit_code = kExitUndecided;
      return out;
    };
  });

  auto* ga2_cmd = app.add_subcommand("ga2", "Bounded GA2 check over multipliers 2..bound");
  add_n(ga2_cmd);
  ga2_cmd->add_option("--bound", bound, "Largest multiplier")->check(CLI::Range(2ull, 100'000'000ull));
  ga2_cmd->callback([&] {
    command = "ga2";
    param("n", n_text);
    param("bound", bound);
    action = [&] {
      FactoredNumber n = parse_n(n_text);
      if (n.is_one()) throw UsageError("ga2 needs n >= 2");
      GaVerdict v = ga2_check_bounded(n, bound, ga_options());
      Outcome out;
      out.results = ga_verdict_json(v);
      out.table = ga_table({v});
      if (v.ga2_status == Ga2Status::Undecided) out.exit_code = kExitUndecided;
      return out;
    };
  });

  auto* both_cmd = app.add_subcommand("both-ga", "All n <= limit that are GA1 and bounded-GA2");
  both_cmd->add_option("--limit", limit, "Upper limit")->required()->check(CLI::Range(std::uint64_t{0}, kMaxGaSearchLimit));
  both_cmd->add_option("--bound", bound, "Largest multiplier")->check(CLI::Range(2ull, 100'000'000ull));
  both_cmd->callback([&] {
    command = "both-ga";
    param("limit", limit);
    param("bound", bound);
    action = [&] {
      BothGaResult r = both_ga_search(limit, bound, ga_options());
      Json both = Json::array();
      Json undecided = Json::array();
      for (const auto& v : r.both) both.push_back(ga_verdict_json(v));
      for (const auto& v : r.undecided) undecided.push_back(ga_verdict_json(v));
      Outcome out;
      out.results = Json{{"limit", std::to_string(r.limit)},
                         {"multiplier_bound", std::to_string(r.multiplier_bound)},
                         {"ga1_count", std::to_string(r.ga1_count)},
                         {"both", both},
                         {"undecided", undecided}};
      out.table = ga_table(r.both);
      if (!r.undecided.empty()) out.exit_code = kExitUndecided;
      return out;
    };
  });

  auto* mertens_cmd = app.add_subcommand("mertens", "prod_{p<=x}(1-1/p)^{-1} / log x against e^gamma");
  mertens_cmd->add_option("--x", xs_text, "Comma-separated x values");
  mertens_cmd->callback([&] {
    command = "mertens";
    param("x", xs_text);
    action = [&] {
      std::vector<std::uint64_t> xs;
      std::stringstream ss(xs_text);
      for (std::string item; std::getline(ss, item, ',');) {
        try {
          std::size_t used = 0;
          xs.push_back(std::stoull(item, &used));
          if (used != item.size() || xs.back() < 2) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw UsageError("--x needs integers >= 2, got '" + item + "'");
        }
      }
      if (xs.empty()) throw UsageError("--x is empty");
      Outcome out;
      Json rows = Json::array();
      out.table.columns = {"x", "ratio_lo", "ratio_hi"};
      for (const auto& row : mertens_ratio_table(xs, g.precision)) {
        rows.push_back(Json{{"x", std::to_string(row.x)}, {"ratio", interval_json(row.ratio)}});
        out.table.rows.push_back({std::to_string(row.x), lower_string(row.ratio), upper_string(row.ratio)});
        out.plot.push_back({std::to_string(row.x), lower_string(row.ratio), upper_string(row.ratio)});
      }
      out.has_plot = true;
      out.results = Json{{"rows", rows}, {"target", interval_json(exp_gamma(g.precision))}};
      return out;
    };
  });

  auto* pg_cmd = app.add_subcommand("probe-gronwall", "G along CA numbers (target e^gamma)");
  pg_cmd->add_option("--count", count, "Number of CA terms")->check(CLI::Range(1ull, 100000ull));
  pg_cmd->callback([&] {
    command = "probe-gronwall";
    param("count", count);
    action = [&] {
      Outcome out;
      set_probe(out, gronwall_probe(count, g.precision));
      return out;
    };
  });

  auto* pr_cmd = app.add_subcommand("probe-ramanujan",
                                    "(sigma_{-1}(n) - e^gamma log log n) sqrt(log n) along CA numbers");
  pr_cmd->add_option("--count", count, "Number of CA terms")->check(CLI::Range(2ull, 100000ull));
  pr_cmd->callback([&] {
    command = "probe-ramanujan";
    param("count", count);
    action = [&] {
      Outcome out;
      set_probe(out, ramanujan_limsup_probe(count, g.precision));
      return out;
    };
  });

  auto* pls_cmd = app.add_subcommand("prime-log-sum", "sum_{p<=x} log p / (p^s - 1)");
  pls_cmd->add_option("--x", x_value, "Upper limit x >= 2")->required()->check(CLI::Range(2ull, 100'000'000ull));
  pls_cmd->add_option("--s", s_text, "Parameter s > 0 (rational)");
  pls_cmd->callback([&] {
    command = "prime-log-sum";
    param("x", x_value);
    param("s", s_text);
    action = [&] {
      Rational s = parse_rational(s_text);
      if (s <= 0) throw UsageError("--s must be positive");
      Interval v = prime_log_sum(x_value, Interval::from_rational(s, g.precision));
      Outcome out;
      out.results = Json{{"x", std::to_string(x_value)}, {"s", s.get_str()}, {"value", interval_json(v)}};
      out.table.columns = {"x", "s", "value_lo", "value_hi"};
      out.table.rows.push_back({std::to_string(x_value), s.get_str(), lower_string(v), upper_string(v)});
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  g.journal_flag = journal_opt->count() > 0;
  g.cache_flag = cache_opt->count() > 0;

  Outcome out;
  try {
    out = action();
  } catch (const UsageError& e) {
    std::cerr << "hcn " << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hcn " << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "hcn " << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const StoreError& e) {
    std::cerr << "hcn " << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "hcn " << command << ": " << e.what() << '\n';
    return kExitUsage;
  }

  if (g.json) {
    std::cout << envelope(command, params, out.results, g.precision).dump(2) << '\n';
  } else if (g.csv) {
    print_csv(std::cout, out.table);
  } else if (g.plot_data) {
    if (!out.has_plot) {
      std::cerr << "hcn " << command << ": --plot-data is only available for probe-gronwall, probe-ramanujan and "
                   "mertens\n";
      return kExitUsage;
    }
    print_plot(std::cout, out.plot);
  } else {
    print_table(std::cout, out.table);
  }
  return out.exit_code;
}

}  // namespace hcn::cli

int main(int argc, char** argv) { return hcn::cli::run(argc, argv); }
