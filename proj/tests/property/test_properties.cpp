#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <unistd.h>

#include "doctest.h"
#include "generators.hpp"
#include "hcn/criteria.hpp"
#include "hcn/ga.hpp"
#include "hcn/store.hpp"
#include "support.hpp"

using namespace hcn;
using namespace test_support;
namespace fs = std::filesystem;

namespace {

Interval oracle_interval(const oracle::Real& x) {
  BigFloat lo(mpfr_get_prec(x.get())), hi(mpfr_get_prec(x.get()));
  mpfr_set(lo.get(), x.get(), MPFR_RNDD);
  mpfr_set(hi.get(), x.get(), MPFR_RNDU);
  return Interval::from_endpoints(std::move(lo), std::move(hi));
}

std::uint64_t ca_for_epsilon(const std::vector<ChampionRecord>& ca, long double eps) {
  constexpr long double kGuard = 1e-12L;
  auto near_breakpoint = [&](const std::optional<Breakpoint>& b) {
    if (!b) return false;
    long double v = b->epsilon.mid_double();
    return std::abs(eps - v) <= kGuard * v;
  };
  for (const auto& r : ca) {
    if (near_breakpoint(r.eps_hi) || near_breakpoint(r.eps_lo)) return 0;
    long double hi = r.eps_hi->epsilon.mid_double();
    long double lo = r.eps_lo->epsilon.mid_double();
    if (eps < hi && eps > lo) return r.n.value_u64();
  }
  return 0;
}

}  // namespace

TEST_CASE("outward rounding: doubling the precision refines every enclosure") {
  RefinementTally t = precision_doubling(0x5eed0001, 10000);
  MESSAGE("evaluated " << t.evaluated << ", skipped " << t.skipped);
  CHECK(t.evaluated == 10000);
  CHECK(t.violations == 0);
}

TEST_CASE("compare verdicts never flip between precisions") {
  Rng rng(0x5eed0002);
  Producer eg = [](mpfr_prec_t p) { return exp_gamma(p); };
  for (int i = 0; i < 300; ++i) {
    std::uint64_t n = uniform(rng, 3, 200000);
    FactoredNumber f = factor(n);
    Producer g = [f](mpfr_prec_t p) { return gronwall_G(f, p); };
    std::optional<VerdictState> seen;
    for (mpfr_prec_t p : {32, 64, 128, 512}) {
      CriterionVerdict v = compare(g, eg, Relation::Less, CompareOptions{p, p, false});
      if (v.undecided()) continue;
      if (seen) REQUIRE(*seen == v.state);
      seen = v.state;
    }
  }
}

TEST_CASE("sigma is multiplicative on random coprime pairs") {
  Rng rng(0x5eed0003);
  int tested = 0;
  while (tested < 2000) {
    std::uint64_t a = uniform(rng, 1, 1000000), b = uniform(rng, 1, 1000000);
    if (std::gcd(a, b) != 1) continue;
    ++tested;
    FactoredNumber fa = factor(a), fb = factor(b);
    REQUIRE(sigma(fa * fb) == sigma(fa) * sigma(fb));
    REQUIRE(phi(fa * fb) == phi(fa) * phi(fb));
    REQUIRE(fa * fb == factor(BigInt(static_cast<unsigned long>(a)) * static_cast<unsigned long>(b)));
  }
}

TEST_CASE("sigma-phi bounds hold for n <= 10^4") {
  Interval lower = six_over_pi_squared(128);
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    FactoredNumber f = num(n);
    Rational product = sigma_ratio(f) * Rational(phi(f), BigInt(static_cast<unsigned long>(n)));
    REQUIRE(product < 1);
    REQUIRE(lower.certainly_less(Interval::from_rational(product, 128)));
  }
}

TEST_CASE("superabundant numbers up to 10^8 have non-increasing exponents and contain CA") {
  std::vector<ChampionRecord> sa = sa_enumerate(BigInt(100000000));
  CHECK(sa.size() == 42);
  CHECK(sa.back().n.value() == 73513440);
  std::set<BigInt> values;
  for (const auto& r : sa) {
    values.insert(r.n.value());
    const auto& f = r.n.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      REQUIRE(f[i].prime == (i == 0 ? 2 : next_prime(f[i - 1].prime)));
      if (i > 0) REQUIRE(f[i].exponent <= f[i - 1].exponent);
    }
  }
  CHECK(std::vector<std::uint64_t>(oracle::sa_scan(1000000)) == [&] {
    std::vector<std::uint64_t> small;
    for (const auto& r : sa)
      if (r.n.value() <= 1000000) small.push_back(r.n.value_u64());
    return small;
  }());
  int inside = 0;
  for (const auto& r : ca_sequence(20)) {
    if (r.n.value() > 100000000) break;
    ++inside;
    CHECK(values.count(r.n.value()) == 1);
  }
  CHECK(inside >= 12);
}

TEST_CASE("CA numbers match the definition over an epsilon grid") {
  std::vector<ChampionRecord> ca = ca_sequence(20);
  std::vector<ChampionRecord> upto(ca.begin(), ca.begin() + 10);  // all CA <= 10^6
  REQUIRE(upto.back().n.value() == 720720);
  long double floor = upto.back().eps_lo->epsilon.mid_double() * (1 + 1e-6L);
  CaGridResult r = ca_grid_check(1000000, 0.58L, floor, 4000, [&](long double e) { return ca_for_epsilon(upto, e); });
  CHECK(r.mismatches == 0);
  CHECK(r.grid_points > 3900);
  std::vector<std::uint64_t> expected;
  for (const auto& c : upto) expected.push_back(c.n.value_u64());
  CHECK(r.maximizers == expected);

  // beyond 10^6, against the per-prime maximizer oracle
  long double lowest = ca.back().eps_lo->epsilon.mid_double() * (1 + 1e-6L);
  auto sweep = oracle::ca_sweep(0.58L, lowest, 20000);
  REQUIRE(sweep.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) CHECK(oracle::factor_value(sweep[i]) == ca[i].n.value().get_str());
}

TEST_CASE("crossing breakpoints reproduces shc_from_epsilon inside each range") {
  Rng rng(0x5eed0004);
  std::vector<ChampionRecord> ca = ca_sequence(25);
  for (int i = 0; i < 100; ++i) {
    const ChampionRecord& r = ca[uniform(rng, 0, ca.size() - 1)];
    Rational eps = rational_between(rng, r.eps_lo->epsilon, r.eps_hi->epsilon);
    ShcResult shc = shc_from_epsilon(ShcParameter{Rational(1), eps}, 1000000);
    REQUIRE(shc.champion.n == r.n);
    REQUIRE_FALSE(shc.champion.tie);
  }
}

TEST_CASE("double product identity for s in {1/2, 1, 2}") {
  Rng rng(0x5eed0005);
  for (const Rational& s : {Rational(1, 2), Rational(1), Rational(2)}) {
    for (int i = 0; i < 20; ++i) {
      Rational eps(static_cast<long>(uniform(rng, 25, 600)), 1000);
      ShcResult shc = shc_from_epsilon(ShcParameter{s, eps}, 1000000);
      Interval product = sigma_product_check(shc.champion, s, 128);
      Interval direct = sigma_minus_s_interval(shc.champion.n, Interval::from_rational(s, 128));
      REQUIRE(product.intersects(direct));
      if (s.get_den() == 1) REQUIRE(product.contains(sigma_minus_s(shc.champion.n, s)));
    }
  }
}

TEST_CASE("sandwich lemma between consecutive CA numbers up to 55440") {
  std::vector<ChampionRecord> ca = ca_sequence(9);
  // the pair (2, 6) straddles e, where log log changes sign; G(3) > G(6) there
  MaxGResult low = max_G_between(2, 6);
  CHECK(*low.argmax == 3);
  for (std::size_t i = 1; i + 1 < ca.size(); ++i) {
    MaxGResult m = max_G_between(ca[i].n.value_u64(), ca[i + 1].n.value_u64());
    Interval bound = max(gronwall_G(ca[i].n, 128), gronwall_G(ca[i + 1].n, 128));
    REQUIRE(m.max_enclosure);
    CHECK_FALSE(bound.certainly_less(*m.max_enclosure));
  }
}

TEST_CASE("Robin counterexamples on [2, 5040] agree with a direct high-precision evaluation") {
  RangeCheckReport r = robin_verify_range(2, 5040);
  std::vector<std::uint64_t> got;
  for (const auto& o : r.degenerate)
    if (o.state == VerdictState::Fails) got.push_back(o.n.value_u64());
  for (const auto& o : r.counterexamples) got.push_back(o.n.value_u64());
  CHECK(r.undecided.empty());
  std::vector<std::uint64_t> expected = oracle::robin_violators(2, 5040);
  CHECK(got == expected);
  CHECK(expected.size() == 26);
  CHECK(expected.back() == 5040);
}

TEST_CASE("ga1 agrees with a direct high-precision evaluation for n <= 10^4") {
  std::vector<std::uint64_t> s = oracle::sigma_sieve(10000);
  for (std::uint64_t n = 4; n <= 10000; ++n) {
    FactoredNumber f = num(n);
    if (f.is_prime()) continue;
    oracle::Real gn = oracle::g_value(n, s[n]);
    bool expected = true;
    for (const auto& pp : f.factors()) {
      oracle::Real other = oracle::g_value(n / pp.prime, s[n / pp.prime]);
      if (mpfr_cmp(gn.get(), other.get()) < 0) expected = false;
    }
    GaVerdict v = ga1_check(f);
    REQUIRE(v.ga1_state != VerdictState::Undecided);
    REQUIRE(v.is_ga1 == expected);
    REQUIRE_FALSE(v.witnesses.empty());
    if (v.is_ga1) REQUIRE(v.witnesses.size() == f.factors().size());
    for (const auto& w : v.witnesses) REQUIRE(w.g_n.intersects(oracle_interval(gn)));
  }
}

TEST_CASE("ga2 refutations are stable as the bound grows") {
  Rng rng(0x5eed0006);
  int refuted = 0;
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t n = uniform(rng, 2, 1000000);
    std::uint64_t b = uniform(rng, 2, 64);
    GaVerdict v = ga2_check_bounded(num(n), b);
    REQUIRE(v.ga2_status != Ga2Status::Undecided);
    if (v.ga2_status != Ga2Status::No) continue;
    ++refuted;
    REQUIRE(v.ga2_witness);
    REQUIRE(*v.ga2_witness <= b);
    for (std::uint64_t larger : {b + 1, b + uniform(rng, 1, 500), 4 * b}) {
      GaVerdict w = ga2_check_bounded(num(n), larger);
      REQUIRE(w.ga2_status == Ga2Status::No);
      REQUIRE(*w.ga2_witness <= *v.ga2_witness);
    }
  }
  CHECK(refuted > 900);
}

TEST_CASE("GA2 at bound 10^4 on (5040, 2*10^5]: the bounded survivors are not GA1") {
  std::vector<std::uint64_t> yes;
  for (std::uint64_t n = 5041; n <= 200000; ++n) {
    GaVerdict v = ga2_check_bounded(num(n), 10000);
    REQUIRE(v.ga2_status != Ga2Status::Undecided);
    if (v.ga2_status == Ga2Status::YesBounded) yes.push_back(n);
  }
  CHECK(yes == std::vector<std::uint64_t>{7560, 10080, 15120, 20160, 55440, 110880, 166320});
  for (std::uint64_t n : yes) CHECK_FALSE(ga1_check(num(n)).is_ga1);
}

TEST_CASE("4 is found by both_ga_search for every bound") {
  for (std::uint64_t bound : {2ULL, 3ULL, 10ULL, 1000ULL}) {
    for (std::uint64_t limit : {4ULL, 100ULL, 5000ULL}) {
      BothGaResult r = both_ga_search(limit, bound);
      REQUIRE_FALSE(r.both.empty());
      CHECK(r.both.front().n == num(4));
    }
  }
}

TEST_CASE("champion records survive a text round trip") {
  Rng rng(0x5eed0007);
  std::vector<std::uint64_t> primes = primes_up_to(5000);
  for (int i = 0; i < 1000; ++i) {
    // exponents non-increasing over a prefix of the primes; some values run to ~1000 digits
    std::size_t k = uniform(rng, 0, i % 10 == 0 ? 400 : 30);
    std::vector<PrimePower> f;
    std::uint32_t e = static_cast<std::uint32_t>(uniform(rng, 1, 12));
    for (std::size_t j = 0; j < k && e > 0; ++j) {
      f.push_back({primes[j], e});
      if (uniform(rng, 0, 3) == 0) e = static_cast<std::uint32_t>(uniform(rng, 0, e));
    }
    ChampionRecord r;
    r.n = FactoredNumber::from_factors(f);
    r.kind = uniform(rng, 0, 1) ? ChampionKind::CA : ChampionKind::SHC;
    r.s = r.kind == ChampionKind::CA ? Rational(1) : Rational(static_cast<long>(uniform(rng, 1, 9)), 4);
    r.largest_prime = r.n.largest_prime();
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(uniform(rng, 32, 600));
    if (!r.n.is_one()) {
      std::uint64_t p = r.n.largest_prime();
      r.eps_hi = Breakpoint{p, r.n.exponent_of(p), breakpoint_epsilon(p, r.n.exponent_of(p), r.s, prec), false};
      r.eps_lo = Breakpoint{2, r.n.exponent_of(2) + 1, breakpoint_epsilon(2, r.n.exponent_of(2) + 1, r.s, prec),
                            uniform(rng, 0, 9) == 0};
      r.g = gronwall_G(r.n, prec);
    }
    if (r.kind == ChampionKind::SHC) {
      for (std::size_t j = uniform(rng, 0, 4); j > 0; --j) r.x_cutoffs.push_back(primes[uniform(rng, 0, 100)]);
      std::sort(r.x_cutoffs.rbegin(), r.x_cutoffs.rend());
    }
    r.tie = uniform(rng, 0, 9) == 0;
    std::string line = encode_record(r);
    ChampionRecord back = decode_record(line, r.kind, r.s);
    REQUIRE(back.n == r.n);
    REQUIRE(back.kind == r.kind);
    REQUIRE(back.s == r.s);
    REQUIRE(back.tie == r.tie);
    REQUIRE(back.x_cutoffs == r.x_cutoffs);
    REQUIRE(back.eps_hi.has_value() == r.eps_hi.has_value());
    if (r.eps_hi) {
      REQUIRE(back.eps_hi->epsilon.precision() == prec);
      REQUIRE(back.eps_lo->tied_with_next == r.eps_lo->tied_with_next);
      REQUIRE(mpfr_equal_p(back.g->lo().get(), r.g->lo().get()));
      REQUIRE(mpfr_equal_p(back.g->hi().get(), r.g->hi().get()));
    }
    REQUIRE(encode_record(back) == line);
  }
}

TEST_CASE("journal replay after a crash keeps exactly the completed entries") {
  Rng rng(0x5eed0008);
  std::string tmpl = (fs::temp_directory_path() / "hcn-prop-XXXXXX").string();
  fs::path dir = mkdtemp(tmpl.data());
  for (int trial = 0; trial < 200; ++trial) {
    fs::path path = dir / ("j" + std::to_string(trial));
    std::size_t complete = uniform(rng, 0, 12);
    std::vector<JournalEntry> entries;
    std::uint64_t lo = uniform(rng, 2, 1000);
    for (std::size_t i = 0; i <= complete; ++i) {
      JournalEntry e;
      e.criterion = uniform(rng, 0, 1) ? "robin" : "sigma-phi";
      e.lo = static_cast<unsigned long>(lo);
      std::uint64_t hi = lo + uniform(rng, 0, 5000);
      e.hi = static_cast<unsigned long>(hi);
      lo = hi + 1 + uniform(rng, 0, 1) * uniform(rng, 1, 100);
      e.verdict = VerdictState::Holds;
      e.precision_used = 128;
      e.checked_count = hi - e.lo.get_ui() + 1;
      e.margin = Interval::from_rational(random_rational(rng), 128);
      e.timestamp = "2026-01-01T00:00:00Z";
      e.engine_version = "test";
      entries.push_back(std::move(e));
    }
    {
      Journal j = Journal::open(path);
      for (std::size_t i = 0; i < complete; ++i) j.append(entries[i]);
    }
    // the last entry is cut off part way through its line
    std::string torn = encode_journal_entry(entries[complete]);
    {
      std::ofstream out(path, std::ios::app | std::ios::binary);
      out << torn.substr(0, uniform(rng, 1, torn.size() - 1));
    }
    Journal j = Journal::open(path);
    REQUIRE(j.entries().size() == complete);
    for (const char* c : {"robin", "sigma-phi"}) {
      std::vector<std::pair<BigInt, BigInt>> expected;
      std::vector<JournalEntry> done(entries.begin(), entries.begin() + static_cast<long>(complete));
      for (const auto& e : done) {
        if (e.criterion != c) continue;
        if (!expected.empty() && expected.back().second + 1 == e.lo)
          expected.back().second = e.hi;
        else
          expected.emplace_back(e.lo, e.hi);
      }
      REQUIRE(j.coverage(c) == expected);
    }
    j.append(entries[complete]);
    REQUIRE(Journal::open(path).entries().size() == complete + 1);
  }
  fs::remove_all(dir);
}

TEST_CASE("mertens ratio approaches e^gamma (soft)") {
  auto rows = mertens_ratio_table({1000, 10000, 100000, 1000000});
  Interval eg = exp_gamma(128);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double gap = rows[i].ratio.mid_double() - eg.mid_double();
    MESSAGE("x = " << rows[i].x << ": ratio - e^gamma = " << gap);
    if (i > 0 && std::abs(gap) > std::abs(rows[i - 1].ratio.mid_double() - eg.mid_double()))
      WARN_MESSAGE(false, "Mertens ratio moved away from e^gamma at x = " << rows[i].x);
  }
  CHECK(std::abs(rows.back().ratio.mid_double() / eg.mid_double() - 1) < 0.01);
}

TEST_CASE("G along CA numbers beyond 5040 stays below e^gamma (soft)") {
  LimsupProbe p = gronwall_probe(40);
  for (const auto& pt : p.points) {
    if (pt.n.value() > 5040) CHECK(pt.quantity.certainly_less(p.target));
  }
}
