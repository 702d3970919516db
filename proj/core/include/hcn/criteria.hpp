#pragma once

// Finite-range verifiers for the inequalities of Robin, Nicolas, the
// sigma-phi bounds, and data probes for Gronwall's and Ramanujan's limsup
// statements. Every verdict is decided by interval comparison.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcn/arith.hpp"
#include "hcn/champions.hpp"
#include "hcn/precision.hpp"

namespace hcn {

struct CheckOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  mpfr_prec_t cap = kPrecisionCap;
  /// Range scans split [lo, hi] into this many contiguous slices.
  unsigned threads = 1;
};

/// One checked value that violated (or could not be separated from) the bound.
struct Observation {
  FactoredNumber n;
  Interval value;
  VerdictState state = VerdictState::Fails;
};

struct RangeCheckReport {
  std::string criterion;
  BigInt lo;
  BigInt hi;
  std::uint64_t checked_count = 0;
  std::vector<Observation> counterexamples;
  /// Values that stayed Undecided at the precision cap.
  std::vector<Observation> undecided;
  /// Robin scans only: every n in [2, 15] of the range, with its own verdict.
  /// These are kept apart from `counterexamples`.
  std::vector<Observation> degenerate;
  /// Aggregate: Fails iff counterexamples is non-empty; otherwise Undecided
  /// iff `undecided` is non-empty; otherwise Holds. The margin is the
  /// tightest margin seen among decided checks.
  CriterionVerdict verdict;
  /// CA walks: the last champion walked and an enclosure of its logarithm.
  std::optional<FactoredNumber> horizon;
  std::optional<Interval> horizon_log;
  std::string statement;
};

/// Concatenates reports over adjacent ranges of the same criterion, in order.
RangeCheckReport merge_reports(const std::vector<RangeCheckReport>& parts);

/// The summary sentence attached to a report of the named criterion.
std::string criterion_statement(const std::string& criterion, VerdictState state);

// --- Robin -------------------------------------------------------------------

inline constexpr std::uint64_t kDegenerateRobinMax = 15;
inline constexpr std::uint64_t kRobinCaStart = 55440;

/// G(n) < e^gamma.
CriterionVerdict robin_check(const FactoredNumber& n, const CheckOptions& options = {});

/// Exhaustive Robin check of every integer in [lo, hi].
RangeCheckReport robin_verify_range(std::uint64_t lo, std::uint64_t hi, const CheckOptions& options = {});

/// Walks CA numbers with P+(N) <= max_pplus and checks G(N) < e^gamma for every
/// CA number N >= 55440. By the sandwich lemma this covers all n in
/// [55440, H] where H is the last CA number walked.
RangeCheckReport robin_verify_ca(std::uint64_t max_pplus, const CheckOptions& options = {});

// --- Nicolas -----------------------------------------------------------------

/// (p# / log log p#) / phi(p#), i.e. mertens_product(p) / log theta(p).
Interval nicolas_quantity(std::uint64_t p, mpfr_prec_t prec);

/// nicolas_quantity(p) > e^gamma for a prime p > 2.
CriterionVerdict nicolas_check(std::uint64_t p, const CheckOptions& options = {});

/// Every prime 2 < p <= p_max.
RangeCheckReport nicolas_verify_upto(std::uint64_t p_max, const CheckOptions& options = {});

// --- sigma * phi -------------------------------------------------------------

/// 6/pi^2 < (sigma(n)/n)(phi(n)/n) < 1 for every n in [lo, hi], lo >= 2.
RangeCheckReport sigma_phi_check(std::uint64_t lo, std::uint64_t hi, const CheckOptions& options = {});

// --- Mertens -----------------------------------------------------------------

struct MertensRow {
  std::uint64_t x;
  Interval ratio;  // prod_{p <= x} (1 - 1/p)^{-1} / log x
};

std::vector<MertensRow> mertens_ratio_table(const std::vector<std::uint64_t>& xs, mpfr_prec_t prec = kDefaultPrecision);

// --- limsup probes -----------------------------------------------------------

/// (sigma_{-1}(n) - e^gamma log log n) sqrt(log n); rejects n < 3.
Interval ramanujan_quantity(const FactoredNumber& n, mpfr_prec_t prec = kDefaultPrecision);

struct ProbePoint {
  FactoredNumber n;
  Interval log_n;
  Interval quantity;
};

struct LimsupProbe {
  std::string name;
  std::vector<ProbePoint> points;  // ascending in n
  Interval target;
};

/// G along the first ca_count CA numbers, target e^gamma.
LimsupProbe gronwall_probe(std::size_t ca_count, mpfr_prec_t prec = kDefaultPrecision);

/// ramanujan_quantity along the first ca_count CA numbers (from 6 on, since
/// the quantity needs n >= 3), target ramanujan_constant.
LimsupProbe ramanujan_limsup_probe(std::size_t ca_count, mpfr_prec_t prec = kDefaultPrecision);

}  // namespace hcn
