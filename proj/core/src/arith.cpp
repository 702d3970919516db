#include "hcn/arith.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace hcn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1u << 20;
constexpr u64 kLogCacheLimit = 1u << 16;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Sieve of Eratosthenes over odd numbers.
std::vector<u64> sieve(u64 x) {
  std::vector<u64> out;
  if (x < 2) return out;
  out.push_back(2);
  if (x < 3) return out;
  u64 half = (x - 1) / 2;  // index i <-> 2i + 1, i in [1, half]
  std::vector<bool> composite(half + 1, false);
  for (u64 i = 1; i <= half; ++i) {
    if (composite[i]) continue;
    u64 p = 2 * i + 1;
    out.push_back(p);
    u64 sq = p * p;
    if (sq > x) continue;
    for (u64 j = (sq - 1) / 2; j <= half; j += p) composite[j] = true;
  }
  return out;
}

const std::vector<u64>& trial_primes() {
  static const std::vector<u64> primes = sieve(kTrialLimit);
  return primes;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  split_u64(d, out);
  split_u64(n / d, out);
}

std::vector<PrimePower> collect(std::vector<u64> primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

BigInt pow_big(u64 base, unsigned long exp) {
  BigInt out;
  BigInt b(std::to_string(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

BigInt to_big(u64 v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

// p^k if it fits in 64 bits.
bool checked_pow(u64 p, std::uint32_t k, u64& out) {
  u128 acc = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    acc *= p;
    if (acc > std::numeric_limits<u64>::max()) return false;
  }
  out = static_cast<u64>(acc);
  return true;
}

// [num/den rounded down, num/den rounded up] for 64-bit integers.
Interval ratio_interval(u64 num, u64 den, mpfr_prec_t prec) {
  BigFloat n(64), d(64), lo(prec), hi(prec);
  mpfr_set_uj(n.get(), num, MPFR_RNDN);
  mpfr_set_uj(d.get(), den, MPFR_RNDN);
  mpfr_div(lo.get(), n.get(), d.get(), MPFR_RNDD);
  mpfr_div(hi.get(), n.get(), d.get(), MPFR_RNDU);
  return Interval::from_endpoints(std::move(lo), std::move(hi));
}

Interval integer_interval(u64 v, mpfr_prec_t prec) {
  BigFloat lo(prec), hi(prec);
  mpfr_set_uj(lo.get(), v, MPFR_RNDD);
  mpfr_set_uj(hi.get(), v, MPFR_RNDU);
  return Interval::from_endpoints(std::move(lo), std::move(hi));
}

}  // namespace

// ---------------------------------------------------------------------------
// FactoredNumber

FactoredNumber FactoredNumber::from_factors(std::vector<PrimePower> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].exponent == 0) throw std::invalid_argument("exponent must be >= 1");
    if (!hcn::is_prime(factors[i].prime)) {
      throw std::invalid_argument("not a prime: " + std::to_string(factors[i].prime));
    }
    if (i > 0 && factors[i - 1].prime >= factors[i].prime) {
      throw std::invalid_argument("primes must be strictly increasing");
    }
  }
  return FactoredNumber(std::move(factors));
}

FactoredNumber FactoredNumber::from_canonical(std::vector<PrimePower> factors) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < factors.size(); ++i) {
    assert(factors[i].exponent >= 1);
    assert(i == 0 || factors[i - 1].prime < factors[i].prime);
  }
#endif
  return FactoredNumber(std::move(factors));
}

FactoredNumber FactoredNumber::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty integer");
  auto parse_int = [](std::string_view s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("not a non-negative integer: " + std::string(s));
    }
    return BigInt(std::string(s), 10);
  };
  FactoredNumber result;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    std::string_view term = trim(text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    std::size_t caret = term.find('^');
    BigInt base = parse_int(trim(term.substr(0, caret)));
    unsigned long exp = 1;
    if (caret != std::string_view::npos) {
      BigInt e = parse_int(trim(term.substr(caret + 1)));
      if (!e.fits_uint_p() || e == 0) throw std::invalid_argument("bad exponent in: " + std::string(term));
      exp = e.get_ui();
    }
    FactoredNumber f = factor(base);
    std::vector<PrimePower> raised = f.factors_;
    for (auto& pp : raised) {
      u128 e = static_cast<u128>(pp.exponent) * exp;
      if (e > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("exponent too large");
      pp.exponent = static_cast<std::uint32_t>(e);
    }
    result = result * FactoredNumber(std::move(raised));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return result;
}

BigInt FactoredNumber::value() const {
  BigInt out = 1;
  for (const auto& [p, e] : factors_) out *= pow_big(p, e);
  return out;
}

bool FactoredNumber::fits_u64() const {
  u128 acc = 1;
  for (const auto& [p, e] : factors_) {
    for (std::uint32_t i = 0; i < e; ++i) {
      acc *= p;
      if (acc > std::numeric_limits<u64>::max()) return false;
    }
  }
  return true;
}

std::uint64_t FactoredNumber::value_u64() const {
  u128 acc = 1;
  for (const auto& [p, e] : factors_) {
    for (std::uint32_t i = 0; i < e; ++i) {
      acc *= p;
      if (acc > std::numeric_limits<u64>::max()) throw std::overflow_error("value exceeds 64 bits");
    }
  }
  return static_cast<u64>(acc);
}

std::uint32_t FactoredNumber::exponent_of(std::uint64_t prime) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                             [](const PrimePower& pp, u64 p) { return pp.prime < p; });
  return it != factors_.end() && it->prime == prime ? it->exponent : 0;
}

FactoredNumber FactoredNumber::operator*(const FactoredNumber& other) const {
  std::vector<PrimePower> out;
  out.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
      out.push_back(*a++);
    } else if (a == factors_.end() || b->prime < a->prime) {
      out.push_back(*b++);
    } else {
      out.push_back({a->prime, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  return FactoredNumber(std::move(out));
}

FactoredNumber FactoredNumber::divided_by_prime(std::uint64_t prime) const {
  std::vector<PrimePower> out = factors_;
  auto it = std::find_if(out.begin(), out.end(), [&](const PrimePower& pp) { return pp.prime == prime; });
  if (it == out.end()) throw std::invalid_argument(std::to_string(prime) + " does not divide " + to_string());
  if (--it->exponent == 0) out.erase(it);
  return FactoredNumber(std::move(out));
}

FactoredNumber FactoredNumber::times_prime_power(std::uint64_t prime, std::uint32_t k) const {
  if (k == 0) return *this;
  return *this * FactoredNumber(std::vector<PrimePower>{{prime, k}});
}

std::string FactoredNumber::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// primes

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These witnesses are sufficient for all n < 3.3 * 10^24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) { return sieve(x); }

std::uint64_t next_prime(std::uint64_t n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

FactoredNumber primorial(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("primorial requires a prime, got " + std::to_string(p));
  std::vector<PrimePower> out;
  for (u64 q : sieve(p)) out.push_back({q, 1});
  return FactoredNumber::from_canonical(std::move(out));
}

// ---------------------------------------------------------------------------
// factorization

FactoredNumber factor(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cannot factor 0");
  std::vector<PrimePower> out;
  for (u64 p : trial_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) {
    std::vector<u64> rest;
    if (n < kTrialLimit * kTrialLimit) {
      rest.push_back(n);
    } else {
      split_u64(n, rest);
    }
    for (const auto& pp : collect(std::move(rest))) out.push_back(pp);
  }
  return FactoredNumber::from_canonical(std::move(out));
}

FactoredNumber factor(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factor requires n >= 1");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    u64 v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
    return factor(v);
  }
  BigInt rem = n;
  std::vector<PrimePower> out;
  for (u64 p : trial_primes()) {
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p) == 0) continue;
    std::uint32_t e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++e;
    }
    out.push_back({p, e});
    if (mpz_sizeinbase(rem.get_mpz_t(), 2) <= 64) break;
  }
  if (mpz_sizeinbase(rem.get_mpz_t(), 2) > 64) {
    throw std::domain_error("cofactor beyond 64 bits; general factorization is not supported");
  }
  u64 v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, rem.get_mpz_t());
  FactoredNumber tail = factor(v);
  return FactoredNumber::from_canonical(std::move(out)) * tail;
}

void for_each_factored(std::uint64_t lo, std::uint64_t hi,
                       const std::function<void(std::uint64_t, const FactoredNumber&)>& visit) {
  if (lo == 0) throw std::invalid_argument("for_each_factored requires lo >= 1");
  if (hi < lo) return;
  u64 root = static_cast<u64>(std::sqrt(static_cast<long double>(hi))) + 1;
  const std::vector<u64> primes = sieve(root);
  constexpr u64 kBlock = 1u << 15;
  std::vector<u64> rem;
  std::vector<std::vector<PrimePower>> facs;
  for (u64 a = lo;; a += kBlock) {
    u64 b = std::min(hi, a + kBlock - 1);
    std::size_t len = static_cast<std::size_t>(b - a + 1);
    rem.resize(len);
    facs.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
      rem[i] = a + i;
      facs[i].clear();
    }
    for (u64 p : primes) {
      if (p * p > b) break;
      u64 start = (a + p - 1) / p * p;
      for (u64 m = start; m <= b; m += p) {
        std::size_t i = static_cast<std::size_t>(m - a);
        std::uint32_t e = 0;
        while (rem[i] % p == 0) {
          rem[i] /= p;
          ++e;
        }
        facs[i].push_back({p, e});
      }
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (rem[i] > 1) facs[i].push_back({rem[i], 1});
      visit(a + i, FactoredNumber::from_canonical(facs[i]));
    }
    if (b == hi) break;
  }
}

SmallFactorTable::SmallFactorTable(std::uint32_t limit) : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
  for (std::uint32_t i = 2; i <= limit_; ++i) {
    if (spf_[i] != 0) continue;
    for (u64 j = i; j <= limit_; j += i) {
      if (spf_[j] == 0) spf_[j] = i;
    }
  }
}

FactoredNumber SmallFactorTable::factor(std::uint32_t n) const {
  if (n == 0 || n > limit_) throw std::out_of_range("SmallFactorTable::factor out of range");
  std::vector<PrimePower> out;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return FactoredNumber::from_canonical(std::move(out));
}

// ---------------------------------------------------------------------------
// multiplicative functions

BigInt sigma(const FactoredNumber& n) {
  BigInt out = 1;
  for (const auto& [p, e] : n.factors()) out *= (pow_big(p, e + 1) - 1) / (to_big(p) - 1);
  return out;
}

BigInt phi(const FactoredNumber& n) {
  BigInt out = 1;
  for (const auto& [p, e] : n.factors()) out *= pow_big(p, e - 1) * (to_big(p) - 1);
  return out;
}

BigInt divisor_count(const FactoredNumber& n) {
  BigInt out = 1;
  for (const auto& pp : n.factors()) out *= pp.exponent + 1;
  return out;
}

Rational sigma_ratio(const FactoredNumber& n) {
  BigInt num = 1, den = 1;
  for (const auto& [p, e] : n.factors()) {
    num *= pow_big(p, e + 1) - 1;
    den *= pow_big(p, e) * (to_big(p) - 1);
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational sigma_minus_s(const FactoredNumber& n, const Rational& s) {
  if (s.get_den() != 1 || s < 0) {
    throw std::invalid_argument("exact sigma_{-s} needs integer s >= 0; use sigma_minus_s_interval");
  }
  if (!s.get_num().fits_ulong_p()) throw std::invalid_argument("s too large");
  unsigned long k = s.get_num().get_ui();
  if (k == 0) return Rational(divisor_count(n));
  BigInt num = 1, den = 1;
  for (const auto& [p, e] : n.factors()) {
    BigInt pk = pow_big(p, k);
    BigInt pke = pow_big(p, k * e);
    num *= pke * pk - 1;
    den *= (pk - 1) * pke;
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// interval-valued quantities

Interval log_prime(std::uint64_t p, mpfr_prec_t prec) {
  if (p >= kLogCacheLimit) return log(integer_interval(p, prec));
  thread_local std::unordered_map<mpfr_prec_t, std::unordered_map<u64, Interval>> cache;
  auto& table = cache[prec];
  auto it = table.find(p);
  if (it != table.end()) return it->second;
  Interval value = log(integer_interval(p, prec));
  table.emplace(p, value);
  return value;
}

Interval log_value(const FactoredNumber& n, mpfr_prec_t prec) {
  if (n.is_one()) return Interval(prec);
  if (n.fits_u64()) return log(integer_interval(n.value_u64(), prec));
  Interval sum(prec);
  for (const auto& [p, e] : n.factors()) {
    Interval term = log_prime(p, prec);
    if (e > 1) term *= integer_interval(e, prec);
    sum += term;
  }
  return sum;
}

Interval sigma_ratio_interval(const FactoredNumber& n, mpfr_prec_t prec) {
  Interval acc = Interval::exact(1, prec);
  for (const auto& [p, e] : n.factors()) {
    u64 pe = 0, pe1 = 0;
    if (checked_pow(p, e, pe) && checked_pow(p, e + 1, pe1) &&
        static_cast<u128>(pe) * (p - 1) <= std::numeric_limits<u64>::max()) {
      acc *= ratio_interval(pe1 - 1, pe * (p - 1), prec);
    } else {
      Rational r(pow_big(p, e + 1) - 1, pow_big(p, e) * (to_big(p) - 1));
      r.canonicalize();
      acc *= Interval::from_rational(r, prec);
    }
  }
  return acc;
}

Interval sigma_minus_s_interval(const FactoredNumber& n, const Interval& s) {
  if (!s.is_positive()) throw std::invalid_argument("sigma_minus_s_interval requires s > 0");
  const mpfr_prec_t prec = s.precision();
  Interval acc = Interval::exact(1, prec);
  for (const auto& [p, e] : n.factors()) {
    // 1 + u + ... + u^e with u = p^{-s}, evaluated by Horner; increasing in u.
    Interval u = exp(-(s * log_prime(p, prec)));
    Interval sum = Interval::exact(1, prec);
    for (std::uint32_t i = 0; i < e; ++i) sum = Interval::exact(1, prec) + u * sum;
    acc *= sum;
  }
  return acc;
}

Interval theta(std::uint64_t x, mpfr_prec_t prec) {
  Interval sum(prec);
  for (u64 p : sieve(x)) sum += log_prime(p, prec);
  return sum;
}

Interval prime_log_sum(std::uint64_t x, const Interval& s) {
  if (x < 2) throw std::invalid_argument("prime_log_sum requires x >= 2");
  if (!s.is_positive()) throw std::invalid_argument("prime_log_sum requires s > 0");
  const mpfr_prec_t prec = s.precision();
  const Interval one = Interval::exact(1, prec);
  Interval sum(prec);
  for (u64 p : sieve(x)) {
    Interval lp = log_prime(p, prec);
    sum += lp / (exp(s * lp) - one);
  }
  return sum;
}

}  // namespace hcn
