#include "doctest.h"
#include "hcn/arith.hpp"
#include "support.hpp"

using namespace hcn;
using test_support::num;

namespace {

std::vector<PrimePower> pp(std::initializer_list<std::pair<std::uint64_t, std::uint32_t>> list) {
  std::vector<PrimePower> out;
  for (auto [p, e] : list) out.push_back({p, e});
  return out;
}

}  // namespace

TEST_CASE("factor small and constructed values") {
  CHECK(factor(std::uint64_t{1}).is_one());
  CHECK(factor(BigInt(1)).is_one());
  CHECK(factor(std::uint64_t{5040}).factors() == pp({{2, 4}, {3, 2}, {5, 1}, {7, 1}}));
  CHECK(factor(std::uint64_t{55440}).factors() == pp({{2, 4}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}));
  CHECK(factor(std::uint64_t{55440}) == factor(std::uint64_t{5040}).times_prime_power(11));
  CHECK(factor(std::uint64_t{97}).is_prime());
  CHECK(factor(std::uint64_t{1} << 63).factors() == pp({{2, 63}}));
}

TEST_CASE("factor handles 64-bit semiprimes and large cofactors") {
  const std::uint64_t p = 4294967291ULL, q = 4294967279ULL;  // largest primes below 2^32
  CHECK(factor(p * q).factors() == pp({{q, 1}, {p, 1}}));
  BigInt big = BigInt(1000003) * BigInt("18446744073709551557");  // 2^64 - 59 is prime
  FactoredNumber f = factor(big);
  CHECK(f.value() == big);
  CHECK(f.largest_prime() == 18446744073709551557ULL);
}

TEST_CASE("factor rejects non-positive input") {
  CHECK_THROWS_AS(factor(BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(factor(BigInt(-12)), std::invalid_argument);
}

TEST_CASE("factor round-trips with value") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    FactoredNumber f = factor(n);
    REQUIRE(f.value_u64() == n);
    REQUIRE(factor(f.value()) == f);
  }
}

TEST_CASE("FactoredNumber construction and parsing") {
  CHECK(FactoredNumber::parse("2^4*3^2*5*7").value() == 5040);
  CHECK(FactoredNumber::parse("5040") == num(5040));
  CHECK(FactoredNumber::parse("1").is_one());
  CHECK(num(5040).to_string() == "2^4*3^2*5*7");
  CHECK(num(1).to_string() == "1");
  CHECK_THROWS_AS(FactoredNumber::from_factors(pp({{3, 1}, {2, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(FactoredNumber::from_factors(pp({{4, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(FactoredNumber::from_factors(pp({{2, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(FactoredNumber::parse("2^^3"), std::invalid_argument);
  CHECK_THROWS_AS(FactoredNumber::parse(""), std::invalid_argument);
  CHECK(num(12) * num(35) == num(420));
  CHECK(num(12).divided_by_prime(2) == num(6));
  CHECK(num(55440).largest_prime() == 11);
  CHECK(num(1).largest_prime() == 1);
  CHECK(num(5040).exponent_of(2) == 4);
  CHECK(num(5040).exponent_of(11) == 0);
}

TEST_CASE("sigma, phi and divisor count examples") {
  CHECK(sigma(num(1)) == 1);
  CHECK(sigma(num(12)) == 28);
  CHECK(sigma(num(5040)) == 19344);
  CHECK(sigma(num(5041)) == 5113);
  CHECK(sigma(num(10080)) == 39312);
  CHECK(phi(num(1)) == 1);
  CHECK(phi(num(6)) == 2);
  CHECK(phi(num(210)) == 48);
  CHECK(divisor_count(num(12)) == 6);
}

TEST_CASE("sigma and phi agree with brute force for n <= 10^4") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    FactoredNumber f = num(n);
    REQUIRE(sigma(f) == oracle::brute_sigma(n));
    REQUIRE(phi(f) == oracle::brute_phi(n));
  }
}

TEST_CASE("sigma_minus_s exact path") {
  CHECK(sigma_minus_s(num(12), Rational(1)) == Rational(7, 3));
  CHECK(sigma_minus_s(num(12), Rational(0)) == 6);
  CHECK(sigma_minus_s(num(4), Rational(2)) == Rational(21, 16));
  CHECK(sigma_minus_s(num(1), Rational(3)) == 1);
  CHECK_THROWS_AS(sigma_minus_s(num(12), Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(sigma_minus_s(num(12), Rational(-1)), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    FactoredNumber f = num(n);
    REQUIRE(sigma_minus_s(f, Rational(1)) * n == Rational(sigma(f)));
    REQUIRE(sigma_ratio(f) == sigma_minus_s(f, Rational(1)));
  }
}

TEST_CASE("sigma_minus_s_interval") {
  CHECK(sigma_minus_s_interval(num(12), Interval::exact(1, 128)).contains(Rational(7, 3)));
  oracle::Real expected;
  mpfr_set_ui(expected.get(), 2, MPFR_RNDN);
  mpfr_rec_sqrt(expected.get(), expected.get(), MPFR_RNDN);
  mpfr_add_ui(expected.get(), expected.get(), 1, MPFR_RNDN);
  Interval half = Interval::from_rational(Rational(1, 2), 128);
  Interval v = sigma_minus_s_interval(num(2), half);
  CHECK(test_support::encloses(v, expected));
  CHECK(test_support::near(v, 1.70710, 1e-5));
  Interval one = sigma_minus_s_interval(num(1), half);
  CHECK(one.contains(Rational(1)));
  CHECK(one.width_double() == 0.0);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    for (long k = 1; k <= 3; ++k) {
      REQUIRE(sigma_minus_s_interval(num(n), Interval::exact(k, 128)).contains(sigma_minus_s(num(n), Rational(k))));
    }
  }
}

TEST_CASE("primes, theta and primorials") {
  CHECK(primes_up_to(0).empty());
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(100000) == oracle::trial_primes(100000));
  CHECK(next_prime(13) == 17);
  CHECK(next_prime(1) == 2);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7

  Interval t1 = theta(1, 128);
  CHECK(t1.contains(Rational(0)));
  CHECK(t1.width_double() == 0.0);
  CHECK(test_support::near(theta(2, 128), 0.693147, 1e-6));
  CHECK(test_support::near(theta(10, 128), 5.347107, 1e-6));

  CHECK(primorial(2) == num(2));
  CHECK(primorial(7).value() == 210);
  CHECK(primorial(11).value() == 2310);
  CHECK_THROWS_AS(primorial(9), std::invalid_argument);
  for (std::uint64_t p : {2ULL, 3ULL, 97ULL, 1009ULL}) {
    FactoredNumber f = primorial(p);
    BigInt product = 1;
    for (std::uint64_t q : primes_up_to(p)) product *= static_cast<unsigned long>(q);
    REQUIRE(f.value() == product);
    REQUIRE(exp(theta(p, 256)).contains(Rational(product)));
  }
}

TEST_CASE("prime_log_sum examples") {
  Interval one = Interval::exact(1, 128);
  Interval two = Interval::exact(2, 128);
  CHECK(test_support::near(prime_log_sum(2, one), 0.693147, 1e-6));
  CHECK(test_support::near(prime_log_sum(5, one), 1.644812, 1e-6));
  CHECK(test_support::near(prime_log_sum(5, two), 0.435435, 1e-6));
  oracle::Real expected, term;
  for (auto [p, d] : {std::pair{2u, 3u}, {3u, 8u}, {5u, 24u}}) {
    mpfr_set_ui(term.get(), p, MPFR_RNDN);
    mpfr_log(term.get(), term.get(), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), d, MPFR_RNDN);
    mpfr_add(expected.get(), expected.get(), term.get(), MPFR_RNDN);
  }
  CHECK(test_support::encloses(prime_log_sum(5, two), expected));
  CHECK_THROWS(prime_log_sum(1, one));
  CHECK_THROWS(prime_log_sum(5, Interval::exact(0, 128)));
}

TEST_CASE("segmented enumeration matches direct factorization") {
  std::uint64_t expected = 999990;
  for_each_factored(999990, 1000100, [&](std::uint64_t n, const FactoredNumber& f) {
    REQUIRE(n == expected++);
    REQUIRE(f == factor(n));
  });
  CHECK(expected == 1000101);
  SmallFactorTable table(5000);
  for (std::uint32_t n = 1; n <= 5000; ++n) REQUIRE(table.factor(n) == factor(std::uint64_t{n}));
}
