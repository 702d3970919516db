#pragma once

// Rigorous constants and the adaptive-precision comparison engine.
//
// Every inequality in this library is decided by evaluating both sides as
// intervals and doubling the working precision until the enclosures separate
// or the escalation cap is reached.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "hcn/arith.hpp"
#include "hcn/interval.hpp"

namespace hcn {

// --- constants ---------------------------------------------------------------
//
// gamma and pi come from MPFR's correctly rounded constants (mpfr_const_euler,
// mpfr_const_pi) evaluated once rounded down and once rounded up, so the
// enclosure width is at most 2 ulp at the requested precision. Values are
// cached per thread and precision.

/// Euler-Mascheroni constant; width < 2^(4 - precision).
Interval euler_gamma(mpfr_prec_t prec);
/// e^gamma; width < 2^(4 - precision).
Interval exp_gamma(mpfr_prec_t prec);
Interval pi(mpfr_prec_t prec);
/// 6 / pi^2.
Interval six_over_pi_squared(mpfr_prec_t prec);
/// -e^gamma (2 sqrt 2 - 4 - gamma + log 4 pi), the limsup bound along
/// champions for (sigma_{-1}(n) - e^gamma log log n) sqrt(log n).
Interval ramanujan_constant(mpfr_prec_t prec);

// --- the Gronwall quotient ---------------------------------------------------

/// log log n; requires n >= 2.
Interval log_log(const FactoredNumber& n, mpfr_prec_t prec);

/// G(n) = sigma(n) / (n log log n). Rejects n = 1 with std::invalid_argument.
/// For n = 2 the enclosure is negative since log log 2 < 0.
Interval gronwall_G(const FactoredNumber& n, mpfr_prec_t prec);

/// prod_{p <= x} (1 - 1/p)^{-1} for x >= 2.
Interval mertens_product(std::uint64_t x, mpfr_prec_t prec);

// --- verdicts ----------------------------------------------------------------

enum class VerdictState { Holds, Fails, Undecided };

std::string to_string(VerdictState state);

/// Outcome of a rigorous comparison. `margin` encloses the signed distance
/// in the asserted direction (positive means the relation holds) at
/// `precision_used`; it is empty only if no evaluation ever succeeded.
struct CriterionVerdict {
  VerdictState state = VerdictState::Undecided;
  mpfr_prec_t precision_used = 0;
  std::optional<Interval> margin;

  bool holds() const { return state == VerdictState::Holds; }
  bool fails() const { return state == VerdictState::Fails; }
  bool undecided() const { return state == VerdictState::Undecided; }
};

enum class Relation { Less, LessEqual, Greater, GreaterEqual };

/// Re-evaluates a real quantity at a requested working precision.
using Producer = std::function<Interval(mpfr_prec_t)>;

struct CompareOptions {
  mpfr_prec_t start_precision = kDefaultPrecision;
  mpfr_prec_t cap = kPrecisionCap;
  /// The caller has established exact equality of the two sides; a non-strict
  /// relation then holds and a strict one fails without evaluation.
  bool known_equal = false;
};

/// Decides `a rel b`. Precision doubles from start_precision until the
/// enclosures are disjoint or cap is reached; an IntervalDomainError from a
/// producer also triggers escalation. Other producer exceptions propagate.
CriterionVerdict compare(const Producer& a, const Producer& b, Relation rel, const CompareOptions& options = {});

/// Wraps a producer so each precision is evaluated at most once.
Producer memoize(Producer inner);

}  // namespace hcn
