#include "hcn/precision.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hcn {

namespace {

using ConstFn = int (*)(mpfr_ptr, mpfr_rnd_t);

Interval correctly_rounded_constant(ConstFn fn, mpfr_prec_t prec) {
  BigFloat lo(prec), hi(prec);
  fn(lo.get(), MPFR_RNDD);
  fn(hi.get(), MPFR_RNDU);
  return Interval::from_endpoints(std::move(lo), std::move(hi));
}

template <typename Fn>
Interval cached(std::unordered_map<mpfr_prec_t, Interval>& table, mpfr_prec_t prec, Fn compute) {
  auto it = table.find(prec);
  if (it != table.end()) return it->second;
  Interval value = compute();
  table.emplace(prec, value);
  return value;
}

}  // namespace

Interval euler_gamma(mpfr_prec_t prec) {
  thread_local std::unordered_map<mpfr_prec_t, Interval> table;
  return cached(table, prec, [&] { return correctly_rounded_constant(mpfr_const_euler, prec); });
}

Interval exp_gamma(mpfr_prec_t prec) {
  thread_local std::unordered_map<mpfr_prec_t, Interval> table;
  return cached(table, prec, [&] { return exp(euler_gamma(prec)); });
}

Interval pi(mpfr_prec_t prec) {
  thread_local std::unordered_map<mpfr_prec_t, Interval> table;
  return cached(table, prec, [&] { return correctly_rounded_constant(mpfr_const_pi, prec); });
}

Interval six_over_pi_squared(mpfr_prec_t prec) {
  Interval p = pi(prec);
  return Interval::exact(6, prec) / (p * p);
}

Interval ramanujan_constant(mpfr_prec_t prec) {
  Interval two_sqrt_two = Interval::exact(2, prec) * sqrt(Interval::exact(2, prec));
  Interval log_four_pi = log(Interval::exact(4, prec) * pi(prec));
  Interval inner = two_sqrt_two - Interval::exact(4, prec) - euler_gamma(prec) + log_four_pi;
  return -(exp_gamma(prec) * inner);
}

Interval log_log(const FactoredNumber& n, mpfr_prec_t prec) {
  if (n.is_one()) throw std::invalid_argument("log log n is undefined for n = 1");
  return log(log_value(n, prec));
}

Interval gronwall_G(const FactoredNumber& n, mpfr_prec_t prec) {
  if (n.is_one()) throw std::invalid_argument("G(n) is undefined for n = 1");
  return sigma_ratio_interval(n, prec) / log_log(n, prec);
}

Interval mertens_product(std::uint64_t x, mpfr_prec_t prec) {
  if (x < 2) throw std::invalid_argument("mertens_product requires x >= 2");
  // Multiply numerators and denominators exactly in 64 bits while they fit,
  // then fold each partial ratio into the enclosure.
  Interval acc = Interval::exact(1, prec);
  mpz_class num = 1, den = 1;
  for (std::uint64_t p : primes_up_to(x)) {
    num *= static_cast<unsigned long>(p);
    den *= static_cast<unsigned long>(p - 1);
    if (mpz_sizeinbase(num.get_mpz_t(), 2) > 4 * static_cast<std::size_t>(prec)) {
      acc *= Interval::from_rational(mpq_class(num, den), prec);
      num = 1;
      den = 1;
    }
  }
  mpq_class rest(num, den);
  rest.canonicalize();
  acc *= Interval::from_rational(rest, prec);
  return acc;
}

std::string to_string(VerdictState state) {
  switch (state) {
    case VerdictState::Holds: return "holds";
    case VerdictState::Fails: return "fails";
    case VerdictState::Undecided: return "undecided";
  }
  return "undecided";
}

CriterionVerdict compare(const Producer& a, const Producer& b, Relation rel, const CompareOptions& options) {
  CriterionVerdict verdict;
  const bool strict = rel == Relation::Less || rel == Relation::Greater;
  if (options.known_equal) {
    verdict.state = strict ? VerdictState::Fails : VerdictState::Holds;
    verdict.precision_used = options.start_precision;
    verdict.margin = Interval(options.start_precision);
    return verdict;
  }
  const bool want_less = rel == Relation::Less || rel == Relation::LessEqual;
  mpfr_prec_t prec = std::max<mpfr_prec_t>(options.start_precision, MPFR_PREC_MIN);
  const mpfr_prec_t cap = std::max(options.cap, prec);
  for (;;) {
    verdict.precision_used = prec;
    try {
      Interval lhs = a(prec);
      Interval rhs = b(prec);
      verdict.margin = want_less ? rhs - lhs : lhs - rhs;
      if (verdict.margin->is_positive()) {
        verdict.state = VerdictState::Holds;
        return verdict;
      }
      if (verdict.margin->is_negative()) {
        verdict.state = VerdictState::Fails;
        return verdict;
      }
    } catch (const IntervalDomainError&) {
      // The enclosure is too wide to evaluate; retry at higher precision.
    }
    if (prec >= cap) {
      verdict.state = VerdictState::Undecided;
      return verdict;
    }
    prec = std::min(cap, prec * 2);
  }
}

Producer memoize(Producer inner) {
  auto memo = std::make_shared<std::map<mpfr_prec_t, Interval>>();
  return [inner = std::move(inner), memo](mpfr_prec_t prec) {
    auto it = memo->find(prec);
    if (it != memo->end()) return it->second;
    Interval value = inner(prec);
    memo->emplace(prec, value);
    return value;
  };
}

}  // namespace hcn
