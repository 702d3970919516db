#include "hcn/criteria.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace hcn {

namespace {

// Keeps the decided margin with the smallest lower endpoint.
void absorb_margin(CriterionVerdict& agg, const Interval& margin, mpfr_prec_t prec_used) {
  agg.precision_used = std::max(agg.precision_used, prec_used);
  if (!agg.margin || mpfr_less_p(margin.lo().get(), agg.margin->lo().get())) agg.margin = margin;
}

void finalize(RangeCheckReport& report) {
  if (!report.counterexamples.empty()) {
    report.verdict.state = VerdictState::Fails;
  } else if (!report.undecided.empty()) {
    report.verdict.state = VerdictState::Undecided;
  } else {
    report.verdict.state = VerdictState::Holds;
  }
}

void record(RangeCheckReport& report, const FactoredNumber& n, const Interval& value, const CriterionVerdict& v) {
  switch (v.state) {
    case VerdictState::Holds: absorb_margin(report.verdict, *v.margin, v.precision_used); break;
    case VerdictState::Fails:
      absorb_margin(report.verdict, *v.margin, v.precision_used);
      report.counterexamples.push_back({n, value, VerdictState::Fails});
      break;
    case VerdictState::Undecided:
      report.verdict.precision_used = std::max(report.verdict.precision_used, v.precision_used);
      report.undecided.push_back({n, value, VerdictState::Undecided});
      break;
  }
}

// Decides `value rel bound` with the quick interval check first and the
// escalating comparison only when the base-precision enclosures overlap.
CriterionVerdict decide(const Interval& value, const Interval& bound, Relation rel, const Producer& value_at,
                        const Producer& bound_at, const CheckOptions& options) {
  const bool want_less = rel == Relation::Less || rel == Relation::LessEqual;
  Interval margin = want_less ? bound - value : value - bound;
  if (margin.is_positive()) return CriterionVerdict{VerdictState::Holds, value.precision(), margin};
  if (margin.is_negative()) return CriterionVerdict{VerdictState::Fails, value.precision(), margin};
  return compare(value_at, bound_at, rel, CompareOptions{options.precision * 2, options.cap, false});
}

template <typename PerN>
RangeCheckReport scan_range(const std::string& name, std::uint64_t lo, std::uint64_t hi, const CheckOptions& options,
                            PerN per_n) {
  if (hi < lo) throw std::invalid_argument(name + ": empty range");
  const unsigned threads = std::max(1u, options.threads);
  const std::uint64_t total = hi - lo + 1;
  const std::uint64_t slices = std::min<std::uint64_t>(threads, total);
  std::vector<RangeCheckReport> parts(slices);
  auto run = [&](std::uint64_t k) {
    std::uint64_t a = lo + total * k / slices;
    std::uint64_t b = lo + total * (k + 1) / slices - 1;
    RangeCheckReport& rep = parts[k];
    rep.criterion = name;
    rep.lo = BigInt(static_cast<unsigned long>(a));
    rep.hi = BigInt(static_cast<unsigned long>(b));
    for_each_factored(a, b, [&](std::uint64_t n, const FactoredNumber& f) {
      per_n(n, f, rep);
      ++rep.checked_count;
    });
    finalize(rep);
  };
  if (slices == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t k = 0; k < slices; ++k) pool.emplace_back(run, k);
  }
  return merge_reports(parts);
}

}  // namespace

RangeCheckReport merge_reports(const std::vector<RangeCheckReport>& parts) {
  if (parts.empty()) throw std::invalid_argument("merge_reports needs at least one report");
  RangeCheckReport out;
  out.criterion = parts.front().criterion;
  out.lo = parts.front().lo;
  out.hi = parts.back().hi;
  for (const auto& part : parts) {
    if (part.criterion != out.criterion) throw std::invalid_argument("merge_reports: mixed criteria");
    out.checked_count += part.checked_count;
    out.counterexamples.insert(out.counterexamples.end(), part.counterexamples.begin(), part.counterexamples.end());
    out.undecided.insert(out.undecided.end(), part.undecided.begin(), part.undecided.end());
    out.degenerate.insert(out.degenerate.end(), part.degenerate.begin(), part.degenerate.end());
    out.verdict.precision_used = std::max(out.verdict.precision_used, part.verdict.precision_used);
    if (part.verdict.margin) absorb_margin(out.verdict, *part.verdict.margin, part.verdict.precision_used);
    if (part.horizon) out.horizon = part.horizon;
    if (part.horizon_log) out.horizon_log = part.horizon_log;
  }
  finalize(out);
  out.statement = criterion_statement(out.criterion, out.verdict.state);
  return out;
}

std::string criterion_statement(const std::string& criterion, VerdictState state) {
  const bool holds = state == VerdictState::Holds;
  const bool undecided = state == VerdictState::Undecided;
  if (criterion == "robin") {
    if (holds) return "G(n) < e^gamma for every n in the range (n <= 15 reported separately)";
    return undecided ? "some n in the range could not be decided at the precision cap"
                     : "G(n) < e^gamma does not hold throughout the range";
  }
  if (criterion == "robin-ca") {
    if (holds) return "G(n) < e^gamma for all 55440 <= n <= H, H the last CA number walked (sandwich lemma)";
    return undecided ? "a CA number in the walk could not be decided at the precision cap"
                     : "a CA number in the walk violates G(N) < e^gamma";
  }
  if (criterion == "nicolas") {
    if (holds) return "p#/(log log p# phi(p#)) > e^gamma for every prime 2 < p <= p_max";
    return undecided ? "a primorial could not be decided at the precision cap" : "a primorial violates the bound";
  }
  if (criterion == "sigma-phi") {
    if (holds) return "6/pi^2 < (sigma(n)/n)(phi(n)/n) < 1 for every n in the range";
    return undecided ? "some n in the range could not be decided at the precision cap"
                     : "the sigma-phi bounds fail somewhere in the range";
  }
  return criterion + ": " + to_string(state);
}

// ---------------------------------------------------------------------------
// Robin

CriterionVerdict robin_check(const FactoredNumber& n, const CheckOptions& options) {
  if (n.is_one()) throw std::invalid_argument("robin_check requires n >= 2");
  return compare([&](mpfr_prec_t p) { return gronwall_G(n, p); }, [](mpfr_prec_t p) { return exp_gamma(p); },
                 Relation::Less, CompareOptions{options.precision, options.cap, false});
}

RangeCheckReport robin_verify_range(std::uint64_t lo, std::uint64_t hi, const CheckOptions& options) {
  if (lo < 2) throw std::invalid_argument("robin_verify_range requires lo >= 2");
  RangeCheckReport report = scan_range(
      "robin", lo, hi, options, [&](std::uint64_t n, const FactoredNumber& f, RangeCheckReport& rep) {
        const mpfr_prec_t prec = options.precision;
        Interval g = gronwall_G(f, prec);
        CriterionVerdict v =
            decide(g, exp_gamma(prec), Relation::Less, [&](mpfr_prec_t p) { return gronwall_G(f, p); },
                   [](mpfr_prec_t p) { return exp_gamma(p); }, options);
        if (n <= kDegenerateRobinMax) {
          rep.degenerate.push_back({f, g, v.state});
          return;
        }
        record(rep, f, g, v);
      });
  report.statement = criterion_statement(report.criterion, report.verdict.state);
  return report;
}

RangeCheckReport robin_verify_ca(std::uint64_t max_pplus, const CheckOptions& options) {
  if (max_pplus < 11) throw std::invalid_argument("robin_verify_ca requires max_pplus >= 11");
  const mpfr_prec_t prec = options.precision;
  ChampionWalker walker(Rational(1), prec, options.cap);
  RangeCheckReport report;
  report.criterion = "robin-ca";
  report.lo = kRobinCaStart;
  bool started = false;
  for (;;) {
    ChampionRecord rec = walker.next();
    if (!started) started = !rec.n.fits_u64() || rec.n.value_u64() >= kRobinCaStart;
    if (started) {
      const FactoredNumber n = rec.n;
      CriterionVerdict v = decide(*rec.g, exp_gamma(prec), Relation::Less,
                                  [&](mpfr_prec_t p) { return gronwall_G(n, p); },
                                  [](mpfr_prec_t p) { return exp_gamma(p); }, options);
      record(report, n, *rec.g, v);
      ++report.checked_count;
      report.horizon = n;
    }
    const Breakpoint& upcoming = walker.peek();
    if (upcoming.exponent == 1 && upcoming.prime > max_pplus) break;
  }
  finalize(report);
  if (report.horizon) {
    report.horizon_log = log_value(*report.horizon, prec);
    report.hi = report.horizon->fits_u64() ? BigInt(static_cast<unsigned long>(report.horizon->value_u64()))
                                           : report.horizon->value();
  } else {
    report.hi = report.lo;
  }
  report.statement = criterion_statement(report.criterion, report.verdict.state);
  return report;
}

// ---------------------------------------------------------------------------
// Nicolas

Interval nicolas_quantity(std::uint64_t p, mpfr_prec_t prec) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("nicolas requires a prime p > 2");
  return mertens_product(p, prec) / log(theta(p, prec));
}

CriterionVerdict nicolas_check(std::uint64_t p, const CheckOptions& options) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("nicolas_check requires a prime p > 2");
  return compare([&](mpfr_prec_t q) { return nicolas_quantity(p, q); }, [](mpfr_prec_t q) { return exp_gamma(q); },
                 Relation::Greater, CompareOptions{options.precision, options.cap, false});
}

RangeCheckReport nicolas_verify_upto(std::uint64_t p_max, const CheckOptions& options) {
  if (p_max < 3) throw std::invalid_argument("nicolas_verify_upto requires p_max >= 3");
  const mpfr_prec_t prec = options.precision;
  RangeCheckReport report;
  report.criterion = "nicolas";
  report.lo = 3;
  report.hi = BigInt(static_cast<unsigned long>(p_max));
  const Interval bound = exp_gamma(prec);
  // Running prod p/(p-1) and theta; both stay rigorous under outward rounding.
  Interval product = Interval::exact(2, prec);
  Interval th = log_prime(2, prec);
  for (std::uint64_t p : primes_up_to(p_max)) {
    if (p == 2) continue;
    product *= Interval::from_rational(Rational(static_cast<unsigned long>(p), static_cast<unsigned long>(p - 1)),
                                       prec);
    th += log_prime(p, prec);
    Interval value = product / log(th);
    CriterionVerdict v = decide(value, bound, Relation::Greater,
                                [p](mpfr_prec_t q) { return nicolas_quantity(p, q); },
                                [](mpfr_prec_t q) { return exp_gamma(q); }, options);
    if (v.holds()) {
      absorb_margin(report.verdict, *v.margin, v.precision_used);
    } else {
      record(report, primorial(p), value, v);
    }
    ++report.checked_count;
  }
  finalize(report);
  report.statement = criterion_statement(report.criterion, report.verdict.state);
  return report;
}

// ---------------------------------------------------------------------------
// sigma * phi

RangeCheckReport sigma_phi_check(std::uint64_t lo, std::uint64_t hi, const CheckOptions& options) {
  if (lo < 2) throw std::invalid_argument("sigma_phi_check requires lo >= 2");
  RangeCheckReport report = scan_range(
      "sigma-phi", lo, hi, options, [&](std::uint64_t, const FactoredNumber& f, RangeCheckReport& rep) {
        const mpfr_prec_t prec = options.precision;
        // (sigma(n)/n)(phi(n)/n) = prod_p (1 - p^{-(e+1)}), exactly.
        BigInt num = 1, den = 1;
        for (const auto& [p, e] : f.factors()) {
          BigInt pe;
          mpz_ui_pow_ui(pe.get_mpz_t(), p, e + 1);
          num *= pe - 1;
          den *= pe;
        }
        Rational x(num, den);
        x.canonicalize();
        Interval value = Interval::from_rational(x, prec);
        // Upper bound: exact rational comparison.
        if (x >= 1) {
          rep.counterexamples.push_back({f, value, VerdictState::Fails});
          return;
        }
        Rational gap = 1 - x;
        absorb_margin(rep.verdict, Interval::from_rational(gap, prec), prec);
        CriterionVerdict v = decide(value, six_over_pi_squared(prec), Relation::Greater,
                                    [x](mpfr_prec_t q) { return Interval::from_rational(x, q); },
                                    [](mpfr_prec_t q) { return six_over_pi_squared(q); }, options);
        record(rep, f, value, v);
      });
  report.statement = criterion_statement(report.criterion, report.verdict.state);
  return report;
}

// ---------------------------------------------------------------------------
// Mertens

std::vector<MertensRow> mertens_ratio_table(const std::vector<std::uint64_t>& xs, mpfr_prec_t prec) {
  std::vector<MertensRow> out;
  out.reserve(xs.size());
  for (std::uint64_t x : xs) {
    if (x < 2) throw std::invalid_argument("mertens_ratio_table requires x >= 2");
    out.push_back({x, mertens_product(x, prec) / log(Interval::from_integer(BigInt(static_cast<unsigned long>(x)), prec))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// probes

Interval ramanujan_quantity(const FactoredNumber& n, mpfr_prec_t prec) {
  if (n.is_one() || (n.fits_u64() && n.value_u64() < 3)) throw std::invalid_argument("ramanujan_quantity requires n >= 3");
  Interval log_n = log_value(n, prec);
  return (sigma_ratio_interval(n, prec) - exp_gamma(prec) * log(log_n)) * sqrt(log_n);
}

LimsupProbe gronwall_probe(std::size_t ca_count, mpfr_prec_t prec) {
  if (ca_count < 1) throw std::invalid_argument("gronwall_probe requires ca_count >= 1");
  LimsupProbe probe{"gronwall", {}, exp_gamma(prec)};
  ChampionWalker walker(Rational(1), prec);
  for (std::size_t i = 0; i < ca_count; ++i) {
    ChampionRecord rec = walker.next();
    probe.points.push_back({rec.n, log_value(rec.n, prec), *rec.g});
  }
  return probe;
}

LimsupProbe ramanujan_limsup_probe(std::size_t ca_count, mpfr_prec_t prec) {
  if (ca_count < 1) throw std::invalid_argument("ramanujan_limsup_probe requires ca_count >= 1");
  LimsupProbe probe{"ramanujan", {}, ramanujan_constant(prec)};
  ChampionWalker walker(Rational(1), prec);
  while (probe.points.size() < ca_count) {
    ChampionRecord rec = walker.next();
    if (rec.n.fits_u64() && rec.n.value_u64() < 3) continue;
    probe.points.push_back({rec.n, log_value(rec.n, prec), ramanujan_quantity(rec.n, prec)});
  }
  return probe;
}

}  // namespace hcn
