#include "hcn/interval.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <utility>

namespace hcn {

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  std::memcpy(value_, other.value_, sizeof(mpfr_t));
  other.value_->_mpfr_d = nullptr;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
    std::memcpy(value_, other.value_, sizeof(mpfr_t));
    other.value_->_mpfr_d = nullptr;
  }
  return *this;
}

BigFloat::~BigFloat() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  char* raw = nullptr;
  int rc = 0;
  switch (rnd) {
    case MPFR_RNDD: rc = mpfr_asprintf(&raw, "%.*RDe", digits - 1, value_); break;
    case MPFR_RNDU: rc = mpfr_asprintf(&raw, "%.*RUe", digits - 1, value_); break;
    default: rc = mpfr_asprintf(&raw, "%.*RNe", digits - 1, value_); break;
  }
  if (rc < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

std::string BigFloat::to_exact_decimal() const {
  if (mpfr_nan_p(value_) || mpfr_inf_p(value_)) throw std::domain_error("non-finite BigFloat");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  // The denominator is a power of two, so q * 10^k is an integer for some k.
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  size_t k = 0;
  while (den != 1) {
    // den = 2^j: multiply numerator by 5, drop one factor of two.
    num *= 5;
    den /= 2;
    ++k;
  }
  std::string digits = num.get_str();
  if (k > 0) {
    if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
    digits.insert(digits.size() - k, 1, '.');
  }
  if (negative) digits.insert(0, 1, '-');
  return digits;
}

namespace {

// Parses an optionally signed decimal with optional fraction and exponent into
// an exact rational.
mpq_class parse_decimal_exact(std::string_view text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string mantissa;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("malformed decimal: " + std::string(text));
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::string exp_text(text.substr(i));
    if (exp_text.empty()) throw std::invalid_argument("malformed exponent: " + std::string(text));
    size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent: " + std::string(text));
    }
    i += used;
  }
  if (i != text.size()) throw std::invalid_argument("trailing characters in decimal: " + std::string(text));
  mpz_class num(mantissa, 10);
  if (negative) num = -num;
  long scale = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale >= 0 ? mpq_class(num * pow10) : mpq_class(num, pow10);
  q.canonicalize();
  return q;
}

mpfr_prec_t max_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpq_class q = parse_decimal_exact(text);
  BigFloat out(prec);
  mpfr_set_q(out.get(), q.get_mpq_t(), rnd);
  return out;
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec), precision_(prec) {}

Interval::Interval(BigFloat lo, BigFloat hi, mpfr_prec_t prec)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_(prec) {}

Interval Interval::exact(long value, mpfr_prec_t prec) {
  return from_integer(mpz_class(value), prec);
}

Interval Interval::from_integer(const mpz_class& value, mpfr_prec_t prec) {
  BigFloat lo(prec), hi(prec);
  mpfr_set_z(lo.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), value.get_mpz_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi), prec);
}

Interval Interval::from_rational(const mpq_class& value, mpfr_prec_t prec) {
  BigFloat lo(prec), hi(prec);
  mpfr_set_q(lo.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), value.get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi), prec);
}

Interval Interval::from_endpoints(BigFloat lo, BigFloat hi) {
  if (mpfr_nan_p(lo.get()) || mpfr_nan_p(hi.get()) || mpfr_greater_p(lo.get(), hi.get())) {
    throw std::invalid_argument("interval endpoints out of order");
  }
  mpfr_prec_t prec = std::max(lo.precision(), hi.precision());
  return Interval(std::move(lo), std::move(hi), prec);
}

Interval Interval::from_decimal(std::string_view lo, std::string_view hi, mpfr_prec_t prec) {
  return from_endpoints(BigFloat::parse(lo, prec, MPFR_RNDD), BigFloat::parse(hi, prec, MPFR_RNDU));
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = max_prec(a, b);
  BigFloat lo(prec), hi(prec);
  mpfr_min(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi), prec);
}

bool Interval::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lo_.get(), value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), value.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_.get(), inner.lo_.get()) && mpfr_greaterequal_p(hi_.get(), inner.hi_.get());
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
bool Interval::is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_.get()) < 0; }

bool Interval::intersects(const Interval& other) const {
  return mpfr_lessequal_p(lo_.get(), other.hi_.get()) && mpfr_lessequal_p(other.lo_.get(), hi_.get());
}

bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi_.get(), other.lo_.get()); }

double Interval::mid_double() const { return 0.5 * (lo_.to_double() + hi_.to_double()); }

BigFloat Interval::width() const {
  BigFloat w(precision_);
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
}

Interval& Interval::operator+=(const Interval& rhs) {
  precision_ = max_prec(*this, rhs);
  BigFloat lo(precision_), hi(precision_);
  mpfr_add(lo.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  precision_ = max_prec(*this, rhs);
  BigFloat lo(precision_), hi(precision_);
  mpfr_sub(lo.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Min and max of op over the four endpoint combinations; valid for * and for
// / when the divisor excludes zero.
void corner_extrema(BinaryOp op, const BigFloat& a_lo, const BigFloat& a_hi, const BigFloat& b_lo,
                    const BigFloat& b_hi, BigFloat& lo, BigFloat& hi) {
  const BigFloat* as[2] = {&a_lo, &a_hi};
  const BigFloat* bs[2] = {&b_lo, &b_hi};
  BigFloat down(lo.precision()), up(hi.precision());
  bool first = true;
  for (const BigFloat* a : as) {
    for (const BigFloat* b : bs) {
      op(down.get(), a->get(), b->get(), MPFR_RNDD);
      op(up.get(), a->get(), b->get(), MPFR_RNDU);
      if (first || mpfr_less_p(down.get(), lo.get())) mpfr_set(lo.get(), down.get(), MPFR_RNDD);
      if (first || mpfr_greater_p(up.get(), hi.get())) mpfr_set(hi.get(), up.get(), MPFR_RNDU);
      first = false;
    }
  }
}

}  // namespace

Interval& Interval::operator*=(const Interval& rhs) {
  precision_ = max_prec(*this, rhs);
  BigFloat lo(precision_), hi(precision_);
  if (mpfr_sgn(lo_.get()) >= 0 && mpfr_sgn(rhs.lo_.get()) >= 0) {
    mpfr_mul(lo.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
    mpfr_mul(hi.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
  } else {
    corner_extrema(mpfr_mul, lo_, hi_, rhs.lo_, rhs.hi_, lo, hi);
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (rhs.contains_zero()) throw IntervalDomainError("division by an interval containing zero");
  precision_ = max_prec(*this, rhs);
  BigFloat lo(precision_), hi(precision_);
  if (mpfr_sgn(lo_.get()) >= 0 && rhs.is_positive()) {
    mpfr_div(lo.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
    mpfr_div(hi.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
  } else {
    corner_extrema(mpfr_div, lo_, hi_, rhs.lo_, rhs.hi_, lo, hi);
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval operator-(const Interval& operand) {
  BigFloat lo(operand.precision_), hi(operand.precision_);
  mpfr_neg(lo.get(), operand.hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), operand.lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi), operand.precision_);
}

Interval log(const Interval& x) {
  if (!x.is_positive()) throw IntervalDomainError("log of an interval not strictly positive");
  BigFloat lo(x.precision_), hi(x.precision_);
  mpfr_log(lo.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_log(hi.get(), x.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi), x.precision_);
}

Interval log1p(const Interval& x) {
  if (mpfr_cmp_si(x.lo_.get(), -1) <= 0) throw IntervalDomainError("log1p of an interval reaching -1");
  BigFloat lo(x.precision_), hi(x.precision_);
  mpfr_log1p(lo.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_log1p(hi.get(), x.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi), x.precision_);
}

Interval exp(const Interval& x) {
  BigFloat lo(x.precision_), hi(x.precision_);
  mpfr_exp(lo.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), x.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi), x.precision_);
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_.get()) < 0) throw IntervalDomainError("sqrt of an interval reaching below zero");
  BigFloat lo(x.precision_), hi(x.precision_);
  mpfr_sqrt(lo.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi), x.precision_);
}

Interval pow(const Interval& base, const Interval& exponent) { return exp(exponent * log(base)); }

Interval pow(const Interval& base, unsigned long exponent) {
  Interval result = Interval::exact(1, base.precision());
  Interval factor = base;
  while (exponent > 0) {
    if (exponent & 1UL) result *= factor;
    exponent >>= 1;
    if (exponent > 0) factor *= factor;
  }
  return result;
}

Interval max(const Interval& x, const Interval& y) {
  mpfr_prec_t prec = std::max(x.precision_, y.precision_);
  BigFloat lo(prec), hi(prec);
  mpfr_max(lo.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
  mpfr_max(hi.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi), prec);
}

Interval with_precision(const Interval& x, mpfr_prec_t prec) {
  BigFloat lo(prec), hi(prec);
  mpfr_set(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_set(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval::from_endpoints(std::move(lo), std::move(hi));
}

bool matches_decimal_prefix(const Interval& x, std::string_view prefix) {
  mpq_class value = parse_decimal_exact(prefix);
  size_t point = prefix.find('.');
  size_t frac_digits = point == std::string_view::npos ? 0 : prefix.size() - point - 1;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, frac_digits);
  mpq_class ulp(1, pow10);
  ulp.canonicalize();
  bool negative = !prefix.empty() && prefix.front() == '-';
  if (!negative) {
    mpq_class upper = value + ulp;
    return mpfr_cmp_q(x.lo().get(), value.get_mpq_t()) >= 0 && mpfr_cmp_q(x.hi().get(), upper.get_mpq_t()) < 0;
  }
  mpq_class lower = value - ulp;
  return mpfr_cmp_q(x.lo().get(), lower.get_mpq_t()) > 0 && mpfr_cmp_q(x.hi().get(), value.get_mpq_t()) <= 0;
}

}  // namespace hcn
