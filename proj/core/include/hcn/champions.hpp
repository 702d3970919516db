#pragma once

// Superabundant, colossally abundant and generalized superior highly
// composite numbers.
//
// For a parameter s > 0 the exponent of a prime p in the champion of
// parameter epsilon rises from r - 1 to r exactly when epsilon drops to the
// breakpoint
//
//     eps(p, r) = log((1 - p^{-s(r+1)}) / (1 - p^{-sr})) / log p,
//
// which for s = 1 is log(1 + 1/(p + p^2 + ... + p^r)) / log p. Breakpoints
// strictly decrease in p for fixed r and in r for fixed p, so walking them in
// decreasing order yields the champion sequence one prime power at a time.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcn/arith.hpp"
#include "hcn/interval.hpp"
#include "hcn/precision.hpp"

namespace hcn {

enum class ChampionKind { SA, CA, SHC, GA1 };

std::string to_string(ChampionKind kind);
/// Throws std::invalid_argument for unknown names.
ChampionKind champion_kind_from_string(const std::string& name);

/// Enclosure of eps(p, r) for the given s > 0.
Interval breakpoint_epsilon(std::uint64_t prime, std::uint32_t exponent, const Rational& s, mpfr_prec_t prec);

/// A breakpoint eps(p, r) together with a certified enclosure.
struct Breakpoint {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  Interval epsilon;
  /// Set when this breakpoint could not be separated from its successor in
  /// the table at the escalation cap.
  bool tied_with_next = false;

  friend bool operator==(const Breakpoint& a, const Breakpoint& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

/// Breakpoints sorted by strictly decreasing epsilon.
using BreakpointTable = std::vector<Breakpoint>;

/// All breakpoints with eps >= epsilon_floor and p <= prime_ceiling, sorted by
/// decreasing epsilon with every adjacent pair certified distinct (or flagged).
BreakpointTable ca_breakpoints(const Rational& s, const Rational& epsilon_floor, std::uint64_t prime_ceiling,
                               mpfr_prec_t prec = kDefaultPrecision, mpfr_prec_t cap = kPrecisionCap);

/// Ramanujan's parameters (s, epsilon), both exact and strictly positive.
struct ShcParameter {
  Rational s{1};
  Rational epsilon{1, 2};

  /// Throws std::invalid_argument unless s > 0 and epsilon > 0.
  void validate() const;
};

struct ChampionRecord {
  FactoredNumber n;
  ChampionKind kind = ChampionKind::CA;
  /// Parameter s for CA (always 1) and SHC records.
  Rational s{1};
  /// epsilon range (eps_lo, eps_hi]. eps_hi is the breakpoint crossed to reach
  /// n (absent means +infinity, i.e. n = 1); eps_lo is the next breakpoint.
  std::optional<Breakpoint> eps_lo;
  std::optional<Breakpoint> eps_hi;
  /// Enclosure of G(n); absent for n = 1.
  std::optional<Interval> g;
  std::uint64_t largest_prime = 1;
  /// SHC only: the largest prime <= x_r for r = 1..R.
  std::vector<std::uint64_t> x_cutoffs;
  /// The epsilon range endpoints touch an unresolved breakpoint tie.
  bool tie = false;
};

/// Superabundant numbers <= limit, ascending, starting with 1.
std::vector<ChampionRecord> sa_enumerate(const BigInt& limit, mpfr_prec_t prec = kDefaultPrecision);

/// Walks champions of parameter s in increasing order by crossing breakpoints
/// in decreasing-epsilon order. s = 1 yields the colossally abundant numbers.
class ChampionWalker {
 public:
  explicit ChampionWalker(Rational s = Rational(1), mpfr_prec_t prec = kDefaultPrecision,
                          mpfr_prec_t cap = kPrecisionCap);

  /// The next champion (the first call returns the successor of 1).
  ChampionRecord next();

  /// The breakpoint that the next call to next() will cross.
  const Breakpoint& peek();

  /// The current champion (1 before the first step).
  const FactoredNumber& current() const { return current_; }

 private:
  struct Candidate {
    std::uint64_t prime;
    std::uint32_t exponent;
    Interval epsilon;
  };

  Candidate make_candidate(std::uint64_t prime, std::uint32_t exponent, mpfr_prec_t prec) const;
  void certify_top();
  static bool heap_less(const Candidate& a, const Candidate& b);

  Rational s_;
  mpfr_prec_t prec_;
  mpfr_prec_t cap_;
  std::vector<Candidate> heap_;
  bool top_certified_ = false;
  bool top_tied_ = false;
  std::optional<Breakpoint> peeked_;
  FactoredNumber current_;
  std::vector<PrimePower> factors_;
  Interval sigma_ratio_;
  Interval log_n_;
};

/// The first `count` colossally abundant numbers, ascending (2, 6, 12, ...).
std::vector<ChampionRecord> ca_sequence(std::size_t count, mpfr_prec_t prec = kDefaultPrecision);

struct ShcOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  mpfr_prec_t cap = kPrecisionCap;
};

struct ShcResult {
  ChampionRecord champion;
  /// Enclosures of x_r for r = 1..R from interval-certified bisection.
  std::vector<Interval> x_brackets;
  /// When epsilon sits on a breakpoint that cannot be separated at the cap,
  /// the smaller neighbouring champion. Both are superior at that epsilon.
  std::optional<ChampionRecord> tie_neighbor;
};

/// The generalized superior highly composite number of parameter (s, eps).
/// Throws std::out_of_range if x_1 exceeds prime_ceiling.
ShcResult shc_from_epsilon(const ShcParameter& param, std::uint64_t prime_ceiling, const ShcOptions& options = {});

/// prod_{r=1}^{R} prod_{p <= x_r} (1 - p^{-s(r+1)}) / (1 - p^{-sr}) using the
/// record's x_r cutoffs. Equals sigma_{-s}(n) by telescoping.
Interval sigma_product_check(const ChampionRecord& record, const Rational& s, mpfr_prec_t prec = kDefaultPrecision);

inline constexpr std::uint64_t kMaxGuardBetween = 10'000'000;

struct MaxGResult {
  std::optional<std::uint64_t> argmax;
  std::optional<Interval> argmax_g;
  /// Enclosure of max G over the open range.
  std::optional<Interval> max_enclosure;
};

/// Brute-force maximum of G over the open range (n_lo, n_hi); ties go to the
/// smallest n. Requires 2 <= n_lo < n_hi <= 10^7.
MaxGResult max_G_between(std::uint64_t n_lo, std::uint64_t n_hi, mpfr_prec_t prec = kDefaultPrecision);

}  // namespace hcn
