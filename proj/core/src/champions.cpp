#include "hcn/champions.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hcn {

namespace {

Interval rational_interval(const Rational& q, mpfr_prec_t prec) { return Interval::from_rational(q, prec); }

// eps_r(x) = log((1 - x^{-s(r+1)}) / (1 - x^{-sr})) / log x written as
// log1p(b (1 - u) / (1 - b)) / log x with u = x^{-s}, b = x^{-sr}, which
// avoids subtracting two nearly equal logarithms.
Interval generic_epsilon(const Interval& log_x, std::uint32_t r, const Interval& s) {
  const mpfr_prec_t prec = std::max(log_x.precision(), s.precision());
  const Interval one = Interval::exact(1, prec);
  Interval u = exp(-(s * log_x));
  Interval b = exp(-(s * Interval::exact(r, prec) * log_x));
  return log1p(b * (one - u) / (one - b)) / log_x;
}

Breakpoint make_breakpoint(std::uint64_t p, std::uint32_t r, const Rational& s, mpfr_prec_t prec) {
  return Breakpoint{p, r, breakpoint_epsilon(p, r, s, prec), false};
}

void refine(Breakpoint& bp, const Rational& s, mpfr_prec_t cap) {
  mpfr_prec_t next = std::min(cap, bp.epsilon.precision() * 2);
  bp.epsilon = breakpoint_epsilon(bp.prime, bp.exponent, s, next);
}

// Index of the largest (want_max) or smallest breakpoint, certified against
// every other candidate by escalation. `tied` reports an unresolved pair.
std::size_t certified_extreme(std::vector<Breakpoint>& cands, bool want_max, const Rational& s, mpfr_prec_t cap,
                              bool& tied) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < cands.size(); ++j) {
    for (;;) {
      Breakpoint& a = cands[best];
      Breakpoint& b = cands[j];
      if (a.epsilon.certainly_less(b.epsilon)) {
        if (want_max) best = j;
        break;
      }
      if (b.epsilon.certainly_less(a.epsilon)) {
        if (!want_max) best = j;
        break;
      }
      if (a.epsilon.precision() >= cap && b.epsilon.precision() >= cap) {
        tied = true;
        break;
      }
      refine(a, s, cap);
      refine(b, s, cap);
    }
  }
  return best;
}

Interval sigma_ratio_step(std::uint64_t p, std::uint32_t r, mpfr_prec_t prec) {
  // sigma(p^r)/p^r divided by sigma(p^{r-1})/p^{r-1} = (q + 1) / q with
  // q = p + p^2 + ... + p^r.
  BigInt pr;
  mpz_ui_pow_ui(pr.get_mpz_t(), p, r);
  BigInt q = BigInt(static_cast<unsigned long>(p)) * (pr - 1) / (static_cast<unsigned long>(p) - 1);
  Rational ratio(q + 1, q);
  ratio.canonicalize();
  return Interval::from_rational(ratio, prec);
}

}  // namespace

std::string to_string(ChampionKind kind) {
  switch (kind) {
    case ChampionKind::SA: return "SA";
    case ChampionKind::CA: return "CA";
    case ChampionKind::SHC: return "SHC";
    case ChampionKind::GA1: return "GA1";
  }
  return "CA";
}

ChampionKind champion_kind_from_string(const std::string& name) {
  if (name == "SA") return ChampionKind::SA;
  if (name == "CA") return ChampionKind::CA;
  if (name == "SHC") return ChampionKind::SHC;
  if (name == "GA1") return ChampionKind::GA1;
  throw std::invalid_argument("unknown champion kind: " + name);
}

Interval breakpoint_epsilon(std::uint64_t prime, std::uint32_t exponent, const Rational& s, mpfr_prec_t prec) {
  if (exponent == 0) throw std::invalid_argument("breakpoint exponent must be >= 1");
  if (s <= 0) throw std::invalid_argument("s must be positive");
  Interval log_p = log_prime(prime, prec);
  if (s == 1) {
    BigInt pr;
    mpz_ui_pow_ui(pr.get_mpz_t(), prime, exponent);
    BigInt q = BigInt(static_cast<unsigned long>(prime)) * (pr - 1) / (static_cast<unsigned long>(prime) - 1);
    return log1p(Interval::from_rational(Rational(1, q), prec)) / log_p;
  }
  return generic_epsilon(log_p, exponent, rational_interval(s, prec));
}

BreakpointTable ca_breakpoints(const Rational& s, const Rational& epsilon_floor, std::uint64_t prime_ceiling,
                               mpfr_prec_t prec, mpfr_prec_t cap) {
  if (epsilon_floor <= 0) throw std::invalid_argument("epsilon_floor must be positive");
  if (prime_ceiling < 2) throw std::invalid_argument("prime_ceiling must be >= 2");
  if (s <= 0) throw std::invalid_argument("s must be positive");
  BreakpointTable table;
  const Producer floor = [&](mpfr_prec_t p) { return rational_interval(epsilon_floor, p); };
  CompareOptions opts{prec, cap, false};
  for (std::uint64_t p : primes_up_to(prime_ceiling)) {
    std::uint32_t r = 1;
    for (;; ++r) {
      const Producer eps = [&](mpfr_prec_t q) { return breakpoint_epsilon(p, r, s, q); };
      CriterionVerdict v = compare(eps, floor, Relation::GreaterEqual, opts);
      if (v.fails()) break;
      // Undecided means eps(p, r) is indistinguishable from the floor; keep it.
      table.push_back(make_breakpoint(p, r, s, prec));
    }
    if (r == 1) break;  // eps(q, 1) < floor for every larger prime q as well
  }
  auto by_hi_desc = [](const Breakpoint& a, const Breakpoint& b) {
    return mpfr_greater_p(a.epsilon.hi().get(), b.epsilon.hi().get()) != 0;
  };
  std::sort(table.begin(), table.end(), by_hi_desc);
  for (std::size_t i = 0; i + 1 < table.size();) {
    Breakpoint& a = table[i];
    Breakpoint& b = table[i + 1];
    if (b.epsilon.certainly_less(a.epsilon)) {
      ++i;
      continue;
    }
    if (a.epsilon.precision() >= cap && b.epsilon.precision() >= cap) {
      a.tied_with_next = true;
      ++i;
      continue;
    }
    refine(a, s, cap);
    refine(b, s, cap);
    std::sort(table.begin(), table.end(), by_hi_desc);
    i = i > 0 ? i - 1 : 0;
  }
  return table;
}

void ShcParameter::validate() const {
  if (s <= 0) throw std::invalid_argument("s must be > 0");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be > 0");
}

// ---------------------------------------------------------------------------
// superabundant numbers

namespace {

void collect_candidates(const std::vector<std::uint64_t>& primes, std::size_t index, std::uint32_t max_exp,
                        const BigInt& value, const BigInt& limit, std::vector<PrimePower>& factors,
                        std::vector<std::pair<BigInt, FactoredNumber>>& out) {
  out.emplace_back(value, FactoredNumber::from_canonical(factors));
  if (index >= primes.size()) return;
  const std::uint64_t p = primes[index];
  BigInt v = value;
  for (std::uint32_t e = 1; e <= max_exp; ++e) {
    v *= static_cast<unsigned long>(p);
    if (v > limit) break;
    factors.push_back({p, e});
    collect_candidates(primes, index + 1, e, v, limit, factors, out);
    factors.pop_back();
  }
}

}  // namespace

std::vector<ChampionRecord> sa_enumerate(const BigInt& limit, mpfr_prec_t prec) {
  if (limit < 1) throw std::invalid_argument("sa_enumerate requires limit >= 1");
  // Superabundant numbers have non-increasing exponents over consecutive
  // primes, so only such numbers need to be compared.
  std::vector<std::uint64_t> primes;
  BigInt primorial_value = 1;
  for (std::uint64_t p = 2;; p = next_prime(p)) {
    primorial_value *= static_cast<unsigned long>(p);
    if (primorial_value > limit) break;
    primes.push_back(p);
  }
  std::uint32_t max_exp = static_cast<std::uint32_t>(mpz_sizeinbase(limit.get_mpz_t(), 2));
  std::vector<std::pair<BigInt, FactoredNumber>> candidates;
  std::vector<PrimePower> scratch;
  collect_candidates(primes, 0, max_exp, BigInt(1), limit, scratch, candidates);
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<ChampionRecord> out;
  Rational best = 0;
  for (const auto& [value, n] : candidates) {
    Rational ratio = sigma_ratio(n);
    if (ratio <= best) continue;
    best = ratio;
    ChampionRecord rec;
    rec.n = n;
    rec.kind = ChampionKind::SA;
    rec.largest_prime = n.largest_prime();
    if (!n.is_one()) rec.g = gronwall_G(n, prec);
    out.push_back(std::move(rec));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ChampionWalker

ChampionWalker::ChampionWalker(Rational s, mpfr_prec_t prec, mpfr_prec_t cap)
    : s_(std::move(s)), prec_(prec), cap_(cap), sigma_ratio_(Interval::exact(1, prec)), log_n_(prec) {
  if (s_ <= 0) throw std::invalid_argument("s must be positive");
  heap_.push_back(make_candidate(2, 1, prec_));
}

ChampionWalker::Candidate ChampionWalker::make_candidate(std::uint64_t prime, std::uint32_t exponent,
                                                         mpfr_prec_t prec) const {
  return Candidate{prime, exponent, breakpoint_epsilon(prime, exponent, s_, prec)};
}

bool ChampionWalker::heap_less(const Candidate& a, const Candidate& b) {
  return mpfr_less_p(a.epsilon.hi().get(), b.epsilon.hi().get()) != 0;
}

void ChampionWalker::certify_top() {
  if (top_certified_) return;
  top_tied_ = false;
  for (;;) {
    if (heap_.size() <= 1) break;
    std::size_t c = 1;
    if (heap_.size() > 2 && heap_less(heap_[1], heap_[2])) c = 2;
    // Every non-root element has hi <= hi of a root child, so separating the
    // root from its larger child separates it from the whole heap.
    if (heap_[c].epsilon.certainly_less(heap_[0].epsilon)) break;
    mpfr_prec_t p0 = heap_[0].epsilon.precision();
    mpfr_prec_t pc = heap_[c].epsilon.precision();
    if (p0 >= cap_ && pc >= cap_) {
      top_tied_ = true;
      break;
    }
    heap_[0] = make_candidate(heap_[0].prime, heap_[0].exponent, std::min(cap_, p0 * 2));
    heap_[c] = make_candidate(heap_[c].prime, heap_[c].exponent, std::min(cap_, pc * 2));
    std::make_heap(heap_.begin(), heap_.end(), heap_less);
  }
  top_certified_ = true;
}

const Breakpoint& ChampionWalker::peek() {
  certify_top();
  const Candidate& top = heap_.front();
  peeked_ = Breakpoint{top.prime, top.exponent, top.epsilon, top_tied_};
  return *peeked_;
}

ChampionRecord ChampionWalker::next() {
  certify_top();
  const bool crossed_tied = top_tied_;
  std::pop_heap(heap_.begin(), heap_.end(), heap_less);
  Candidate crossed = std::move(heap_.back());
  heap_.pop_back();
  top_certified_ = false;

  const std::uint64_t p = crossed.prime;
  const std::uint32_t r = crossed.exponent;
  heap_.push_back(make_candidate(p, r + 1, prec_));
  std::push_heap(heap_.begin(), heap_.end(), heap_less);
  if (r == 1) {
    heap_.push_back(make_candidate(next_prime(p), 1, prec_));
    std::push_heap(heap_.begin(), heap_.end(), heap_less);
    factors_.push_back({p, 1});
  } else {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                               [](const PrimePower& pp, std::uint64_t q) { return pp.prime < q; });
    if (it == factors_.end() || it->prime != p || it->exponent + 1 != r) {
      throw std::logic_error("breakpoint walk out of order");
    }
    ++it->exponent;
  }
  sigma_ratio_ *= sigma_ratio_step(p, r, prec_);
  log_n_ += log_prime(p, prec_);
  current_ = FactoredNumber::from_canonical(factors_);

  const Breakpoint& upcoming = peek();
  ChampionRecord rec;
  rec.n = current_;
  rec.kind = s_ == 1 ? ChampionKind::CA : ChampionKind::SHC;
  rec.s = s_;
  rec.eps_hi = Breakpoint{p, r, crossed.epsilon, crossed_tied};
  rec.eps_lo = upcoming;
  rec.g = sigma_ratio_ / log(log_n_);
  rec.largest_prime = current_.largest_prime();
  rec.tie = crossed_tied || upcoming.tied_with_next;
  return rec;
}

std::vector<ChampionRecord> ca_sequence(std::size_t count, mpfr_prec_t prec) {
  if (count < 1) throw std::invalid_argument("ca_sequence requires count >= 1");
  ChampionWalker walker(Rational(1), prec);
  std::vector<ChampionRecord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(walker.next());
  return out;
}

// ---------------------------------------------------------------------------
// generalized superior highly composite numbers

ShcResult shc_from_epsilon(const ShcParameter& param, std::uint64_t prime_ceiling, const ShcOptions& options) {
  param.validate();
  if (prime_ceiling < 2) throw std::invalid_argument("prime_ceiling must be >= 2");
  const mpfr_prec_t prec = options.precision;
  const Rational& s = param.s;
  const Rational& eps = param.epsilon;
  const CompareOptions cmp{prec, options.cap, false};
  const Producer eps_producer = [&](mpfr_prec_t q) { return rational_interval(eps, q); };
  const std::vector<std::uint64_t> primes = primes_up_to(prime_ceiling);
  const Interval s_iv = rational_interval(s, prec);

  auto eps_at_point = [&](const BigFloat& x, std::uint32_t r) {
    Interval x_iv = Interval::from_endpoints(x, x);
    return generic_epsilon(log(x_iv), r, s_iv);
  };

  // x_1 must not exceed the sieve.
  {
    const Producer at_ceiling = [&](mpfr_prec_t q) {
      BigFloat c(q);
      mpfr_set_uj(c.get(), prime_ceiling, MPFR_RNDN);
      Interval x_iv = Interval::from_endpoints(c, c);
      return generic_epsilon(log(x_iv), 1, rational_interval(s, q));
    };
    CriterionVerdict v = compare(at_ceiling, eps_producer, Relation::Less, cmp);
    if (!v.holds()) {
      throw std::out_of_range("x_1 exceeds prime_ceiling " + std::to_string(prime_ceiling) + "; enlarge the sieve");
    }
  }

  ShcResult result;
  std::vector<std::size_t> cutoff_count;  // number of primes <= x_r
  std::vector<std::size_t> tied_count;    // primes at level r on an unresolved tie
  BigFloat upper(prec);
  mpfr_set_uj(upper.get(), prime_ceiling, MPFR_RNDN);
  for (std::uint32_t r = 1;; ++r) {
    const Producer eps2 = [&](mpfr_prec_t q) { return breakpoint_epsilon(2, r, s, q); };
    CriterionVerdict at_two = compare(eps2, eps_producer, Relation::GreaterEqual, cmp);
    if (at_two.fails()) break;
    if (at_two.undecided()) {
      result.x_brackets.push_back(Interval::exact(2, prec));
      cutoff_count.push_back(0);
      tied_count.push_back(1);
      break;  // every deeper level is strictly below this breakpoint
    }
    // Bisection for x_r on [2, upper]: eps_r(lo) >= eps > eps_r(hi).
    BigFloat lo(prec), hi = upper;
    mpfr_set_ui(lo.get(), 2, MPFR_RNDN);
    BigFloat mid(prec);
    for (mpfr_prec_t it = 0; it < 1 + prec / 2; ++it) {
      mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
      mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
      if (mpfr_equal_p(mid.get(), lo.get()) || mpfr_equal_p(mid.get(), hi.get())) break;
      Interval f = eps_at_point(mid, r) - rational_interval(eps, prec);
      if (f.is_positive()) {
        lo = mid;
      } else if (f.is_negative()) {
        hi = mid;
      } else {
        break;
      }
    }
    result.x_brackets.push_back(Interval::from_endpoints(lo, hi));
    std::size_t in = 0, tied = 0;
    for (std::uint64_t p : primes) {
      if (mpfr_cmp_ui(lo.get(), static_cast<unsigned long>(p)) >= 0) {
        ++in;
        continue;
      }
      if (mpfr_cmp_ui(hi.get(), static_cast<unsigned long>(p)) <= 0) break;
      const Producer eps_p = [&](mpfr_prec_t q) { return breakpoint_epsilon(p, r, s, q); };
      CriterionVerdict v = compare(eps_p, eps_producer, Relation::GreaterEqual, cmp);
      if (v.holds()) {
        ++in;
      } else if (v.undecided()) {
        ++tied;
        break;
      } else {
        break;
      }
    }
    cutoff_count.push_back(in);
    tied_count.push_back(tied);
    upper = hi;
  }

  auto build = [&](bool include_ties) {
    std::vector<PrimePower> factors;
    std::vector<std::uint64_t> cutoffs;
    for (std::size_t r = 0; r < cutoff_count.size(); ++r) {
      std::size_t k = cutoff_count[r] + (include_ties ? tied_count[r] : 0);
      if (k == 0) break;
      cutoffs.push_back(primes[k - 1]);
      for (std::size_t i = 0; i < k; ++i) {
        if (i < factors.size()) {
          ++factors[i].exponent;
        } else {
          factors.push_back({primes[i], 1});
        }
      }
    }
    ChampionRecord rec;
    rec.n = FactoredNumber::from_canonical(std::move(factors));
    rec.kind = s == 1 ? ChampionKind::CA : ChampionKind::SHC;
    rec.s = s;
    rec.largest_prime = rec.n.largest_prime();
    rec.x_cutoffs = std::move(cutoffs);
    if (!rec.n.is_one()) rec.g = gronwall_G(rec.n, prec);

    // epsilon range: smallest crossed breakpoint, largest uncrossed one.
    std::vector<Breakpoint> crossed, uncrossed;
    for (const auto& [p, e] : rec.n.factors()) {
      crossed.push_back(make_breakpoint(p, e, s, prec));
      uncrossed.push_back(make_breakpoint(p, e + 1, s, prec));
    }
    uncrossed.push_back(make_breakpoint(rec.n.is_one() ? 2 : next_prime(rec.largest_prime), 1, s, prec));
    bool tied = false;
    if (!crossed.empty()) {
      std::size_t i = certified_extreme(crossed, false, s, options.cap, tied);
      rec.eps_hi = crossed[i];
    }
    std::size_t j = certified_extreme(uncrossed, true, s, options.cap, tied);
    rec.eps_lo = uncrossed[j];
    rec.tie = tied;
    return rec;
  };

  bool any_tie = std::any_of(tied_count.begin(), tied_count.end(), [](std::size_t t) { return t > 0; });
  result.champion = build(true);
  if (any_tie) {
    result.champion.tie = true;
    result.tie_neighbor = build(false);
    result.tie_neighbor->tie = true;
  }
  return result;
}

Interval sigma_product_check(const ChampionRecord& record, const Rational& s, mpfr_prec_t prec) {
  if (s <= 0) throw std::invalid_argument("s must be positive");
  if (!record.n.is_one() && record.x_cutoffs.empty()) {
    throw std::invalid_argument("record carries no x_r cutoffs; build it with shc_from_epsilon");
  }
  const Interval s_iv = rational_interval(s, prec);
  const Interval one = Interval::exact(1, prec);
  Interval acc = one;
  std::vector<std::uint64_t> primes =
      primes_up_to(record.x_cutoffs.empty() ? 1 : record.x_cutoffs.front());
  for (std::size_t idx = 0; idx < record.x_cutoffs.size(); ++idx) {
    const std::uint32_t r = static_cast<std::uint32_t>(idx + 1);
    const Interval sr = s_iv * Interval::exact(r, prec);
    const Interval sr1 = s_iv * Interval::exact(r + 1, prec);
    for (std::uint64_t p : primes) {
      if (p > record.x_cutoffs[idx]) break;
      Interval lp = log_prime(p, prec);
      acc *= (one - exp(-(sr1 * lp))) / (one - exp(-(sr * lp)));
    }
  }
  return acc;
}

MaxGResult max_G_between(std::uint64_t n_lo, std::uint64_t n_hi, mpfr_prec_t prec) {
  if (n_lo < 2 || n_lo >= n_hi) throw std::invalid_argument("max_G_between requires 2 <= n_lo < n_hi");
  if (n_hi > kMaxGuardBetween) throw std::invalid_argument("max_G_between is limited to n_hi <= 10^7");
  MaxGResult result;
  if (n_hi - n_lo < 2) return result;
  std::optional<FactoredNumber> best_n;
  for_each_factored(n_lo + 1, n_hi - 1, [&](std::uint64_t n, const FactoredNumber& f) {
    Interval g = gronwall_G(f, prec);
    result.max_enclosure = result.max_enclosure ? max(*result.max_enclosure, g) : g;
    if (!result.argmax) {
      result.argmax = n;
      result.argmax_g = g;
      best_n = f;
      return;
    }
    if (g.certainly_less(*result.argmax_g)) return;
    bool replace = result.argmax_g->certainly_less(g);
    if (!replace) {
      const FactoredNumber candidate = f;
      const FactoredNumber incumbent = *best_n;
      CriterionVerdict v = compare([&](mpfr_prec_t q) { return gronwall_G(candidate, q); },
                                   [&](mpfr_prec_t q) { return gronwall_G(incumbent, q); }, Relation::Greater,
                                   CompareOptions{prec * 2, kPrecisionCap, false});
      replace = v.holds();
    }
    if (replace) {
      result.argmax = n;
      result.argmax_g = g;
      best_n = f;
    }
  });
  return result;
}

}  // namespace hcn
