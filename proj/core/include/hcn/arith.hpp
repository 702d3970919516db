#pragma once

// Exact arithmetic on factored integers: sum-of-divisors, totient, the
// generalized divisor sums sigma_{-s}, primes, primorials and Chebyshev theta.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hcn/interval.hpp"

namespace hcn {

using BigInt = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer held as its prime factorization. Primes are strictly
/// increasing, exponents are >= 1, and the empty list is 1.
class FactoredNumber {
 public:
  FactoredNumber() = default;

  /// Validates ordering, exponents and primality of every base.
  static FactoredNumber from_factors(std::vector<PrimePower> factors);
  /// Trusts the caller: factors must already be canonical (sieve output,
  /// champion construction). Checked only in debug builds.
  static FactoredNumber from_canonical(std::vector<PrimePower> factors);
  /// Accepts "1", "2^4*3^2*5*7" or a plain decimal integer.
  static FactoredNumber parse(std::string_view text);

  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  bool is_prime() const { return factors_.size() == 1 && factors_.front().exponent == 1; }

  BigInt value() const;
  /// Exact value when it fits in 64 bits; throws std::overflow_error otherwise.
  std::uint64_t value_u64() const;
  bool fits_u64() const;

  /// P+(n); 1 for n = 1.
  std::uint64_t largest_prime() const { return factors_.empty() ? 1 : factors_.back().prime; }
  std::uint32_t exponent_of(std::uint64_t prime) const;
  std::size_t omega() const { return factors_.size(); }

  FactoredNumber operator*(const FactoredNumber& other) const;
  /// n / p; throws std::invalid_argument if p does not divide n.
  FactoredNumber divided_by_prime(std::uint64_t prime) const;
  /// n * p^k for a prime p.
  FactoredNumber times_prime_power(std::uint64_t prime, std::uint32_t k = 1) const;

  /// Canonical text form, "1" or "2^4*3^2*5*7".
  std::string to_string() const;

  friend bool operator==(const FactoredNumber&, const FactoredNumber&) = default;

 private:
  explicit FactoredNumber(std::vector<PrimePower> factors) : factors_(std::move(factors)) {}

  std::vector<PrimePower> factors_;
};

// --- primes ----------------------------------------------------------------

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

/// All primes <= x, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// p# = product of primes <= p; p must be prime.
FactoredNumber primorial(std::uint64_t p);

// --- factorization ---------------------------------------------------------

/// Throws std::invalid_argument for n < 1 and std::domain_error when a
/// cofactor exceeds 64 bits after trial division.
FactoredNumber factor(const BigInt& n);
FactoredNumber factor(std::uint64_t n);

/// Factorizes every integer of [lo, hi] with a segmented sieve and hands each
/// (n, factorization) to `visit` in ascending order.
void for_each_factored(std::uint64_t lo, std::uint64_t hi,
                       const std::function<void(std::uint64_t, const FactoredNumber&)>& visit);

/// Smallest-prime-factor table for fast factorization of small integers.
class SmallFactorTable {
 public:
  explicit SmallFactorTable(std::uint32_t limit);
  std::uint32_t limit() const { return limit_; }
  FactoredNumber factor(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

// --- multiplicative functions ----------------------------------------------

BigInt sigma(const FactoredNumber& n);
BigInt phi(const FactoredNumber& n);
BigInt divisor_count(const FactoredNumber& n);

/// sigma(n)/n, built as a product of per-prime exact ratios.
Rational sigma_ratio(const FactoredNumber& n);

/// sigma_{-s}(n) for integer s >= 0. Throws std::invalid_argument otherwise.
Rational sigma_minus_s(const FactoredNumber& n, const Rational& s);

// --- interval-valued quantities --------------------------------------------

/// Enclosure of log p. Small primes are cached per thread and precision.
Interval log_prime(std::uint64_t p, mpfr_prec_t prec);

/// Enclosure of log n computed as sum e_p log p (never materializes n).
Interval log_value(const FactoredNumber& n, mpfr_prec_t prec);

/// Enclosure of sigma(n)/n from the exact per-prime factors
/// (p^{e+1} - 1) / (p^e (p - 1)).
Interval sigma_ratio_interval(const FactoredNumber& n, mpfr_prec_t prec);

/// Enclosure of prod_p (1 - p^{-s(e+1)}) / (1 - p^{-s}) for s > 0.
Interval sigma_minus_s_interval(const FactoredNumber& n, const Interval& s);

/// Chebyshev theta(x) = sum_{p <= x} log p.
Interval theta(std::uint64_t x, mpfr_prec_t prec);

/// sum_{p <= x} log p / (p^s - 1) for s > 0 and x >= 2.
Interval prime_log_sum(std::uint64_t x, const Interval& s);

}  // namespace hcn
