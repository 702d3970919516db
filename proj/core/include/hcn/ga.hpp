#pragma once

// GA1 / GA2 numbers.
//
// GA1: composite N with G(N) >= G(N/p) for every prime factor p.
// GA2: G(N) >= G(aN) for every multiple aN. The GA2 quantifier is infinite;
// a refutation (a concrete multiple with larger G) is definitive while a
// bounded confirmation only covers 2 <= a <= bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcn/arith.hpp"
#include "hcn/precision.hpp"

namespace hcn {

enum class Ga2Status { NotApplicable, YesBounded, No, Undecided };

std::string to_string(Ga2Status status);

struct GaWitness {
  FactoredNumber other;  // N/p for GA1, aN for GA2
  std::uint64_t factor;  // the prime p or the multiplier a
  Interval g_n;
  Interval g_other;
  VerdictState state;    // G(N) >= G(other)
};

struct GaVerdict {
  FactoredNumber n;
  bool is_ga1 = false;
  /// Holds = GA1, Fails = not GA1 (prime, or some N/p has larger G),
  /// Undecided = a comparison could not be settled at the cap.
  VerdictState ga1_state = VerdictState::Fails;
  Ga2Status ga2_status = Ga2Status::NotApplicable;
  /// Multiplier bound covered by a YesBounded (or Undecided) GA2 verdict.
  std::uint64_t ga2_bound = 0;
  /// The smallest refuting multiplier when ga2_status == No.
  std::optional<std::uint64_t> ga2_witness;
  std::vector<GaWitness> witnesses;
};

struct GaOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  mpfr_prec_t cap = kPrecisionCap;
};

/// Requires n >= 2.
GaVerdict ga1_check(const FactoredNumber& n, const GaOptions& options = {});

/// Scans a = 2, 3, ..., multiplier_bound and stops at the first certified
/// refutation. Requires n >= 2 and multiplier_bound >= 2.
GaVerdict ga2_check_bounded(const FactoredNumber& n, std::uint64_t multiplier_bound, const GaOptions& options = {});

inline constexpr std::uint64_t kMaxGaSearchLimit = 10'000'000;

struct BothGaResult {
  /// n <= limit with is_ga1 and a YesBounded GA2 verdict, ascending.
  std::vector<GaVerdict> both;
  /// GA1 candidates whose GA1 or GA2 verdict stayed Undecided.
  std::vector<GaVerdict> undecided;
  std::uint64_t ga1_count = 0;
  std::uint64_t limit = 0;
  std::uint64_t multiplier_bound = 0;
};

/// Requires limit <= 10^7.
BothGaResult both_ga_search(std::uint64_t limit, std::uint64_t multiplier_bound, const GaOptions& options = {});

}  // namespace hcn
