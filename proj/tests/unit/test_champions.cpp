#include <cmath>
#include <map>

#include "doctest.h"
#include "hcn/champions.hpp"
#include "support.hpp"

using namespace hcn;
using test_support::num;

namespace {

std::vector<std::uint64_t> values(const std::vector<ChampionRecord>& records) {
  std::vector<std::uint64_t> out;
  for (const auto& r : records) out.push_back(r.n.value_u64());
  return out;
}

ShcParameter param(Rational s, Rational eps) { return ShcParameter{std::move(s), std::move(eps)}; }

}  // namespace

TEST_CASE("sa_enumerate examples") {
  CHECK(values(sa_enumerate(BigInt(1))) == std::vector<std::uint64_t>{1});
  CHECK(values(sa_enumerate(BigInt(12))) == std::vector<std::uint64_t>{1, 2, 4, 6, 12});
  CHECK(values(sa_enumerate(BigInt(120))) == std::vector<std::uint64_t>{1, 2, 4, 6, 12, 24, 36, 48, 60, 120});
  CHECK(values(sa_enumerate(BigInt(100000))) == oracle::sa_scan(100000));
  for (const auto& r : sa_enumerate(BigInt(5040))) {
    CHECK(r.kind == ChampionKind::SA);
    CHECK(r.largest_prime == r.n.largest_prime());
  }
}

TEST_CASE("breakpoint examples for s = 1") {
  Interval e21 = breakpoint_epsilon(2, 1, Rational(1), 128);
  CHECK(test_support::near(e21, std::log(1.5) / std::log(2.0), 1e-12));
  CHECK(test_support::near(e21, 0.58496, 1e-5));
  CHECK(test_support::near(breakpoint_epsilon(3, 1, Rational(1), 128), 0.26186, 1e-5));
  CHECK(test_support::near(breakpoint_epsilon(2, 2, Rational(1), 128), 0.22239, 1e-5));
  // x = 2 solves x^eps = 1 + 1/x at eps(2,1)
  CHECK(exp(e21 * log(Interval::exact(2, 128))).contains(Rational(3, 2)));
  // general-s form agrees with the closed form at s = 1
  Interval generic = breakpoint_epsilon(7, 3, Rational(2, 2), 256);
  CHECK(test_support::near(generic, std::log1p(1.0 / (7 + 49 + 343)) / std::log(7.0), 1e-12));
  CHECK(test_support::near(breakpoint_epsilon(2, 1, Rational(2), 128), std::log(1.25) / std::log(2.0), 1e-12));
}

TEST_CASE("ca_breakpoints table") {
  BreakpointTable t = ca_breakpoints(Rational(1), Rational(1, 20), 100);
  REQUIRE(t.size() > 5);
  CHECK(t[0].prime == 2);
  CHECK(t[0].exponent == 1);
  CHECK(t[1].prime == 3);
  CHECK(t[2].prime == 2);
  CHECK(t[2].exponent == 2);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    CHECK_FALSE(t[i].tied_with_next);
    CHECK(t[i + 1].epsilon.certainly_less(t[i].epsilon));
  }
  for (const auto& b : t) {
    CHECK(b.epsilon.hi().to_double() >= 1.0 / 20);
    CHECK(b.prime <= 100);
  }
  // for fixed p, exponents appear in increasing order
  std::map<std::uint64_t, std::uint32_t> last;
  for (const auto& b : t) {
    CHECK(b.exponent == last[b.prime] + 1);
    last[b.prime] = b.exponent;
  }
}

TEST_CASE("ca_sequence examples") {
  auto ca = ca_sequence(20);
  CHECK(values(std::vector<ChampionRecord>(ca.begin(), ca.begin() + 8)) ==
        std::vector<std::uint64_t>{2, 6, 12, 60, 120, 360, 2520, 5040});
  CHECK(ca[8].n.value_u64() == 55440);
  CHECK(ca[19].n.value() == BigInt("2021649740510400"));
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const auto& r = ca[i];
    CHECK(r.kind == ChampionKind::CA);
    REQUIRE(r.eps_hi);
    REQUIRE(r.eps_lo);
    CHECK(r.eps_lo->epsilon.certainly_less(r.eps_hi->epsilon));
    CHECK_FALSE(r.tie);
    REQUIRE(r.g);
    CHECK(r.g->intersects(gronwall_G(r.n, 128)));
    if (i > 0) {
      // consecutive records differ by one prime power
      CHECK(r.n == ca[i - 1].n.times_prime_power(r.eps_hi->prime));
      CHECK(ca[i - 1].eps_lo == r.eps_hi);
    }
  }
}

TEST_CASE("ChampionWalker peek and current") {
  ChampionWalker w;
  CHECK(w.current().is_one());
  CHECK(w.peek().prime == 2);
  ChampionRecord first = w.next();
  CHECK(first.n == num(2));
  CHECK(w.current() == num(2));
  CHECK(w.peek().prime == 3);
}

TEST_CASE("shc_from_epsilon examples") {
  CHECK(shc_from_epsilon(param(Rational(1), Rational(1, 2)), 1000).champion.n == num(2));
  CHECK(shc_from_epsilon(param(Rational(1), Rational(1, 5)), 1000).champion.n == num(12));
  CHECK(shc_from_epsilon(param(Rational(1), Rational(1, 10)), 1000).champion.n == num(60));
  CHECK(shc_from_epsilon(param(Rational(1), Rational(1)), 1000).champion.n.is_one());
  CHECK(shc_from_epsilon(param(Rational(1), Rational(3, 5)), 1000).champion.n.is_one());
  ShcResult r = shc_from_epsilon(param(Rational(1), Rational(1, 10)), 1000);
  CHECK(r.champion.x_cutoffs == std::vector<std::uint64_t>{5, 2});
  REQUIRE(r.x_brackets.size() == 2);
  CHECK(r.x_brackets[0].lower_double() >= 5.0);
  CHECK(r.x_brackets[0].upper_double() < 7.0);
  CHECK_THROWS_AS(shc_from_epsilon(param(Rational(1), Rational(1, 1000)), 100), std::out_of_range);
  CHECK_THROWS_AS(shc_from_epsilon(param(Rational(0), Rational(1, 2)), 100), std::invalid_argument);
  CHECK_THROWS_AS(shc_from_epsilon(param(Rational(1), Rational(-1, 2)), 100), std::invalid_argument);
}

TEST_CASE("shc near a breakpoint: separated at the cap, tied below it") {
  Interval e22 = breakpoint_epsilon(2, 2, Rational(1), 400);
  Rational just_above;
  mpfr_get_q(just_above.get_mpq_t(), e22.hi().get());
  ShcResult separated = shc_from_epsilon(param(Rational(1), just_above), 1000, ShcOptions{128, 4096});
  CHECK(separated.champion.n == num(6));
  CHECK_FALSE(separated.champion.tie);
  CHECK_FALSE(separated.tie_neighbor);

  ShcResult tied = shc_from_epsilon(param(Rational(1), just_above), 1000, ShcOptions{128, 128});
  CHECK(tied.champion.tie);
  CHECK(tied.champion.n == num(12));
  REQUIRE(tied.tie_neighbor);
  CHECK(tied.tie_neighbor->n == num(6));
}

TEST_CASE("sigma_product_check examples") {
  auto check = [](Rational eps, const Rational& expected) {
    ShcResult r = shc_from_epsilon(param(Rational(1), std::move(eps)), 100000);
    Interval product = sigma_product_check(r.champion, Rational(1), 128);
    CHECK(product.contains(expected));
  };
  check(Rational(1, 2), Rational(3, 2));
  check(Rational(1, 5), Rational(7, 3));
  ChampionRecord r5040 = shc_from_epsilon(param(Rational(1), Rational(1, 25)), 100000).champion;
  REQUIRE(r5040.n == num(5040));
  CHECK(sigma_product_check(r5040, Rational(1), 128).contains(Rational(19344, 5040)));
  ChampionRecord one = shc_from_epsilon(param(Rational(1), Rational(1)), 100).champion;
  CHECK(sigma_product_check(one, Rational(1), 128).contains(Rational(1)));
}

TEST_CASE("max_G_between examples") {
  MaxGResult a = max_G_between(2520, 5040);
  REQUIRE(a.max_enclosure);
  Interval bound = max(gronwall_G(num(2520), 128), gronwall_G(num(5040), 128));
  CHECK_FALSE(bound.certainly_less(*a.max_enclosure));
  MaxGResult b = max_G_between(5040, 55440);
  REQUIRE(b.max_enclosure);
  CHECK(b.max_enclosure->certainly_less(exp_gamma(128)));
  MaxGResult c = max_G_between(6, 12);
  REQUIRE(c.argmax);
  CHECK(*c.argmax == 8);
  CHECK_FALSE(max(gronwall_G(num(6), 128), gronwall_G(num(12), 128)).certainly_less(*c.max_enclosure));
  CHECK_FALSE(max_G_between(6, 7).argmax);
  CHECK_THROWS_AS(max_G_between(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(max_G_between(10, 10), std::invalid_argument);
  CHECK_THROWS_AS(max_G_between(5, kMaxGuardBetween + 1), std::invalid_argument);
}

TEST_CASE("champion kind names") {
  for (ChampionKind k : {ChampionKind::SA, ChampionKind::CA, ChampionKind::SHC, ChampionKind::GA1}) {
    CHECK(champion_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(champion_kind_from_string("XX"), std::invalid_argument);
}
