#pragma once

// Outward-rounded interval arithmetic on top of MPFR.
//
// Every operation returns an interval that contains the exact result of the
// same operation applied to any points of the operand intervals. Lower
// endpoints are computed with MPFR_RNDD, upper endpoints with MPFR_RNDU.
// Results carry the larger of the operand precisions.

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcn {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kPrecisionCap = 4096;

/// Raised when an operation is undefined somewhere on its operand interval
/// (division by an interval straddling 0, log of a non-positive interval).
/// Adaptive comparisons treat it as "need more precision".
class IntervalDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Owning handle for an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

  /// Scientific notation with `digits` significant digits, rounded in `rnd`.
  std::string to_string(int digits, mpfr_rnd_t rnd) const;

  /// The exact decimal expansion of the stored binary value (always finite).
  std::string to_exact_decimal() const;

  /// Parse a decimal string, rounding in `rnd`. Throws std::invalid_argument.
  static BigFloat parse(std::string_view text, mpfr_prec_t prec, mpfr_rnd_t rnd);

 private:
  mpfr_t value_;
};

class Interval {
 public:
  /// The degenerate interval [0, 0].
  explicit Interval(mpfr_prec_t prec = kDefaultPrecision);

  static Interval exact(long value, mpfr_prec_t prec);
  static Interval from_integer(const mpz_class& value, mpfr_prec_t prec);
  static Interval from_rational(const mpq_class& value, mpfr_prec_t prec);
  /// Requires lo <= hi; throws std::invalid_argument otherwise.
  static Interval from_endpoints(BigFloat lo, BigFloat hi);
  /// Parses decimal endpoints outward (lo rounded down, hi rounded up).
  static Interval from_decimal(std::string_view lo, std::string_view hi, mpfr_prec_t prec);
  /// Smallest interval containing both operands.
  static Interval hull(const Interval& a, const Interval& b);

  mpfr_prec_t precision() const { return precision_; }
  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }

  bool contains(const mpq_class& value) const;
  bool contains(const Interval& inner) const;
  bool contains_zero() const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0
  bool intersects(const Interval& other) const;
  /// hi < other.lo
  bool certainly_less(const Interval& other) const;

  double lower_double() const { return lo_.to_double(MPFR_RNDD); }
  double upper_double() const { return hi_.to_double(MPFR_RNDU); }
  double mid_double() const;
  /// Upper bound on hi - lo.
  BigFloat width() const;
  double width_double() const { return width().to_double(MPFR_RNDU); }

  /// "[lo, hi]" with outward-rounded decimal endpoints.
  std::string to_string(int digits = 20) const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(Interval lhs, const Interval& rhs) { return lhs += rhs; }
  friend Interval operator-(Interval lhs, const Interval& rhs) { return lhs -= rhs; }
  friend Interval operator*(Interval lhs, const Interval& rhs) { return lhs *= rhs; }
  friend Interval operator/(Interval lhs, const Interval& rhs) { return lhs /= rhs; }
  friend Interval operator-(const Interval& operand);

 private:
  Interval(BigFloat lo, BigFloat hi, mpfr_prec_t prec);

  BigFloat lo_;
  BigFloat hi_;
  mpfr_prec_t precision_;

  friend Interval log(const Interval&);
  friend Interval log1p(const Interval&);
  friend Interval exp(const Interval&);
  friend Interval sqrt(const Interval&);
  friend Interval max(const Interval&, const Interval&);
};

Interval log(const Interval& x);
Interval log1p(const Interval& x);
Interval exp(const Interval& x);
Interval sqrt(const Interval& x);
/// base^exponent for a strictly positive base.
Interval pow(const Interval& base, const Interval& exponent);
Interval pow(const Interval& base, unsigned long exponent);
/// Enclosure of max(a, b) for a in x, b in y.
Interval max(const Interval& x, const Interval& y);

/// Re-rounds an interval outward to a different precision.
Interval with_precision(const Interval& x, mpfr_prec_t prec);

/// True when the interval lies inside the truncation cell of a decimal prefix:
/// [d, d + ulp) for non-negative d and (d - ulp, d] for negative d, where ulp
/// is one unit in the last written digit. "1.78107" matches e^gamma.
bool matches_decimal_prefix(const Interval& x, std::string_view prefix);

}  // namespace hcn
