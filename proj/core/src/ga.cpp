#include "hcn/ga.hpp"

#include <stdexcept>

namespace hcn {

namespace {

// G(n) >= G(other) for n != other; distinct integers never tie exactly, so an
// unresolved overlap stays Undecided.
VerdictState at_least(const FactoredNumber& n, const Interval& g_n, const FactoredNumber& other,
                      const Interval& g_other, const GaOptions& options) {
  if (g_other.certainly_less(g_n)) return VerdictState::Holds;
  if (g_n.certainly_less(g_other)) return VerdictState::Fails;
  CriterionVerdict v = compare([&](mpfr_prec_t p) { return gronwall_G(n, p); },
                               [&](mpfr_prec_t p) { return gronwall_G(other, p); }, Relation::GreaterEqual,
                               CompareOptions{options.precision * 2, options.cap, n == other});
  return v.state;
}

GaVerdict ga2_scan(GaVerdict verdict, const SmallFactorTable& table, std::uint64_t bound, const GaOptions& options) {
  const FactoredNumber& n = verdict.n;
  const Interval g_n = gronwall_G(n, options.precision);
  bool undecided = false;
  for (std::uint64_t a = 2; a <= bound; ++a) {
    FactoredNumber multiple = n * table.factor(static_cast<std::uint32_t>(a));
    Interval g_multiple = gronwall_G(multiple, options.precision);
    VerdictState state = at_least(n, g_n, multiple, g_multiple, options);
    if (state == VerdictState::Fails) {
      verdict.ga2_status = Ga2Status::No;
      verdict.ga2_witness = a;
      verdict.witnesses.push_back({std::move(multiple), a, g_n, g_multiple, state});
      return verdict;
    }
    if (state == VerdictState::Undecided) {
      undecided = true;
      verdict.witnesses.push_back({std::move(multiple), a, g_n, g_multiple, state});
    }
  }
  verdict.ga2_status = undecided ? Ga2Status::Undecided : Ga2Status::YesBounded;
  verdict.ga2_bound = bound;
  return verdict;
}

}  // namespace

std::string to_string(Ga2Status status) {
  switch (status) {
    case Ga2Status::NotApplicable: return "not-applicable";
    case Ga2Status::YesBounded: return "yes-bounded";
    case Ga2Status::No: return "no";
    case Ga2Status::Undecided: return "undecided";
  }
  return "not-applicable";
}

GaVerdict ga1_check(const FactoredNumber& n, const GaOptions& options) {
  if (n.is_one()) throw std::invalid_argument("ga1_check requires n >= 2");
  GaVerdict verdict;
  verdict.n = n;
  if (n.is_prime()) {
    verdict.ga1_state = VerdictState::Fails;
    return verdict;
  }
  const Interval g_n = gronwall_G(n, options.precision);
  bool undecided = false;
  for (const auto& pp : n.factors()) {
    FactoredNumber smaller = n.divided_by_prime(pp.prime);
    Interval g_smaller = gronwall_G(smaller, options.precision);
    VerdictState state = at_least(n, g_n, smaller, g_smaller, options);
    verdict.witnesses.push_back({smaller, pp.prime, g_n, g_smaller, state});
    if (state == VerdictState::Fails) {
      verdict.ga1_state = VerdictState::Fails;
      return verdict;
    }
    undecided = undecided || state == VerdictState::Undecided;
  }
  verdict.ga1_state = undecided ? VerdictState::Undecided : VerdictState::Holds;
  verdict.is_ga1 = !undecided;
  return verdict;
}

GaVerdict ga2_check_bounded(const FactoredNumber& n, std::uint64_t multiplier_bound, const GaOptions& options) {
  if (n.is_one()) throw std::invalid_argument("ga2_check_bounded requires n >= 2");
  if (multiplier_bound < 2) throw std::invalid_argument("multiplier_bound must be >= 2");
  if (multiplier_bound > 0xffffffffULL) throw std::invalid_argument("multiplier_bound too large");
  SmallFactorTable table(static_cast<std::uint32_t>(multiplier_bound));
  GaVerdict verdict;
  verdict.n = n;
  return ga2_scan(std::move(verdict), table, multiplier_bound, options);
}

BothGaResult both_ga_search(std::uint64_t limit, std::uint64_t multiplier_bound, const GaOptions& options) {
  if (limit > kMaxGaSearchLimit) throw std::invalid_argument("both_ga_search is limited to 10^7");
  if (multiplier_bound < 2) throw std::invalid_argument("multiplier_bound must be >= 2");
  if (multiplier_bound > 0xffffffffULL) throw std::invalid_argument("multiplier_bound too large");
  BothGaResult result;
  result.limit = limit;
  result.multiplier_bound = multiplier_bound;
  if (limit < 4) return result;
  SmallFactorTable table(static_cast<std::uint32_t>(multiplier_bound));
  for_each_factored(4, limit, [&](std::uint64_t, const FactoredNumber& f) {
    if (f.is_prime()) return;
    GaVerdict v = ga1_check(f, options);
    if (v.ga1_state == VerdictState::Undecided) {
      result.undecided.push_back(std::move(v));
      return;
    }
    if (!v.is_ga1) return;
    ++result.ga1_count;
    v = ga2_scan(std::move(v), table, multiplier_bound, options);
    if (v.ga2_status == Ga2Status::YesBounded) {
      result.both.push_back(std::move(v));
    } else if (v.ga2_status == Ga2Status::Undecided) {
      result.undecided.push_back(std::move(v));
    }
  });
  return result;
}

}  // namespace hcn
