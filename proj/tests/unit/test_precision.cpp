#include <cmath>

#include "doctest.h"
#include "hcn/precision.hpp"
#include "support.hpp"

using namespace hcn;
using test_support::num;

TEST_CASE("interval basics") {
  Interval third = Interval::from_rational(Rational(1, 3), 64);
  CHECK(third.contains(Rational(1, 3)));
  CHECK_FALSE(third.contains(Rational(1, 2)));
  CHECK(third.width_double() < std::ldexp(1.0, -64));
  CHECK(third.is_positive());
  CHECK((-third).is_negative());
  CHECK(Interval::exact(3, 64).width_double() == 0.0);
  CHECK((third + third + third).contains(Rational(1)));
  CHECK((third * Interval::exact(3, 64)).contains(Rational(1)));
  CHECK((Interval::exact(1, 64) / Interval::exact(3, 64)).contains(Rational(1, 3)));
  CHECK((third - third).contains_zero());
  CHECK_THROWS_AS(Interval::exact(1, 64) / (third - third), IntervalDomainError);
  CHECK_THROWS_AS(log(Interval::exact(0, 64)), IntervalDomainError);
  CHECK_THROWS_AS(sqrt(Interval::exact(-1, 64)), IntervalDomainError);
  CHECK(Interval::from_decimal("1.5", "2.5", 64).contains(Rational(2)));
  CHECK_THROWS_AS(Interval::from_decimal("2", "1", 64), std::invalid_argument);
  Interval h = Interval::hull(Interval::exact(1, 64), Interval::exact(5, 64));
  CHECK(h.contains(Rational(3)));
  CHECK(Interval::exact(1, 64).certainly_less(Interval::exact(2, 64)));
  CHECK_FALSE(h.certainly_less(Interval::exact(2, 64)));
  CHECK(max(Interval::exact(1, 64), Interval::exact(2, 64)).contains(Rational(2)));
  CHECK(pow(Interval::exact(2, 64), 10).contains(Rational(1024)));
  CHECK(test_support::near(pow(Interval::exact(2, 128), Interval::from_rational(Rational(1, 2), 128)), std::sqrt(2.0),
                           1e-12));
  CHECK(with_precision(third, 32).contains(third));
}

TEST_CASE("decimal prefix cells") {
  Interval eg = exp_gamma(128);
  CHECK(matches_decimal_prefix(eg, "1.78107"));
  CHECK_FALSE(matches_decimal_prefix(eg, "1.78108"));
  CHECK(matches_decimal_prefix(ramanujan_constant(128), "-1.393"));
  CHECK_FALSE(matches_decimal_prefix(ramanujan_constant(128), "-1.392"));
  CHECK(matches_decimal_prefix(euler_gamma(64), "0.57721"));
  CHECK(matches_decimal_prefix(euler_gamma(64), "0.5772156649015328"));
}

TEST_CASE("euler gamma against an independent Brent-McMillan evaluation") {
  double log2_err = 0;
  oracle::Real bm = oracle::brent_mcmillan_gamma(400, &log2_err);
  CHECK(log2_err < -380);
  for (mpfr_prec_t p : {32, 64, 128, 256, 370}) {
    Interval g = euler_gamma(p);
    // widen the oracle value by its error bound and require overlap
    oracle::Real lo(500), hi(500), err(500);
    mpfr_set_ui_2exp(err.get(), 1, static_cast<long>(std::ceil(log2_err)), MPFR_RNDU);
    mpfr_sub(lo.get(), bm.get(), err.get(), MPFR_RNDD);
    mpfr_add(hi.get(), bm.get(), err.get(), MPFR_RNDU);
    CHECK(mpfr_cmp(g.lo().get(), hi.get()) <= 0);
    CHECK(mpfr_cmp(lo.get(), g.hi().get()) <= 0);
    CHECK(g.width_double() < std::ldexp(1.0, 4 - static_cast<int>(p)));
  }
}

TEST_CASE("constants: widths and consistency") {
  for (mpfr_prec_t p : {32, 64, 128, 512}) {
    CHECK(exp_gamma(p).width_double() < std::ldexp(1.0, 4 - static_cast<int>(p)));
    CHECK(exp(euler_gamma(p)).contains(exp_gamma(p)));
    CHECK(exp_gamma(p).intersects(exp_gamma(2 * p)));
    CHECK(pi(p).intersects(pi(2 * p)));
    CHECK(test_support::near(six_over_pi_squared(p), 0.6079271018540267, 1e-9));
  }
  CHECK(exp_gamma(128).width_double() < std::ldexp(1.0, -124));
  CHECK(exp_gamma(128).width_double() < 1e-10);
  CHECK(ramanujan_constant(128).width_double() < 1e-6);
  CHECK(test_support::encloses(exp_gamma(200), oracle::exp_gamma()));
}

TEST_CASE("gronwall G examples") {
  Interval g2 = gronwall_G(num(2), 128);
  CHECK(g2.is_negative());
  CHECK(test_support::encloses(g2, oracle::g_value(2)));
  Interval g5040 = gronwall_G(num(5040), 128);
  CHECK(test_support::near(g5040, 1.790973, 1e-6));
  CHECK(exp_gamma(128).certainly_less(g5040));
  Interval g5041 = gronwall_G(num(5041), 128);
  CHECK(test_support::near(g5041, 0.4733, 1e-4));
  CHECK(g5041.certainly_less(exp_gamma(128)));
  CHECK_THROWS_AS(gronwall_G(num(1), 128), std::invalid_argument);
  for (std::uint64_t n = 2; n <= 3000; n += 7) REQUIRE(test_support::encloses(gronwall_G(num(n), 128), oracle::g_value(n)));
  CHECK(test_support::near(log_log(num(5040), 128), std::log(std::log(5040.0)), 1e-12));
}

TEST_CASE("compare examples") {
  auto g = [](std::uint64_t n) { return [n](mpfr_prec_t p) { return gronwall_G(factor(n), p); }; };
  Producer eg = [](mpfr_prec_t p) { return exp_gamma(p); };
  CriterionVerdict holds = compare(g(5041), eg, Relation::Less);
  CHECK(holds.holds());
  CHECK(holds.precision_used == kDefaultPrecision);
  REQUIRE(holds.margin);
  CHECK(holds.margin->is_positive());
  CriterionVerdict fails = compare(g(5040), eg, Relation::Less);
  CHECK(fails.fails());
  REQUIRE(fails.margin);
  CHECK(fails.margin->is_negative());
  CriterionVerdict same = compare(eg, eg, Relation::Less, CompareOptions{128, 512, false});
  CHECK(same.undecided());
  CHECK(same.precision_used == 512);
  CHECK(compare(eg, eg, Relation::LessEqual, CompareOptions{128, 512, true}).holds());
  CHECK(compare(eg, eg, Relation::Less, CompareOptions{128, 512, true}).fails());
  CHECK(compare(g(5040), eg, Relation::Greater).holds());
  CHECK(compare(g(5040), eg, Relation::GreaterEqual).holds());
  CHECK(compare(g(5041), eg, Relation::LessEqual).holds());

  // A producer that only separates from 0 at high precision escalates.
  Producer tiny = [](mpfr_prec_t p) {
    Interval x = Interval::from_rational(Rational(1), p);
    Interval big = pow(Interval::exact(2, p), 300);
    return x / big + Interval::from_rational(Rational(1), p) - Interval::from_rational(Rational(1), p);
  };
  Producer zero = [](mpfr_prec_t p) { return Interval::exact(0, p); };
  CriterionVerdict escalated = compare(zero, tiny, Relation::Less);
  CHECK(escalated.holds());
  CHECK(escalated.precision_used == 512);

  // Domain errors escalate instead of propagating.
  int calls = 0;
  Producer flaky = [&](mpfr_prec_t p) {
    ++calls;
    if (p < 256) throw IntervalDomainError("division by an interval containing zero");
    return Interval::exact(1, p);
  };
  CriterionVerdict after = compare(zero, flaky, Relation::Less);
  CHECK(after.holds());
  CHECK(after.precision_used == 256);
  CHECK(calls == 2);

  Producer broken = [](mpfr_prec_t) -> Interval { throw std::runtime_error("boom"); };
  CHECK_THROWS_AS(compare(zero, broken, Relation::Less), std::runtime_error);
}

TEST_CASE("memoize evaluates each precision once") {
  int calls = 0;
  Producer p = memoize([&](mpfr_prec_t q) {
    ++calls;
    return exp_gamma(q);
  });
  p(128);
  p(128);
  p(256);
  CHECK(calls == 2);
}

TEST_CASE("mertens product") {
  Interval two = mertens_product(2, 128);
  CHECK(two.contains(Rational(2)));
  CHECK(mertens_product(10, 128).contains(Rational(35, 8)));
  CHECK_THROWS(mertens_product(1, 128));
  Interval ratio = mertens_product(1000000, 128) / log(Interval::exact(1000000, 128));
  Interval eg = exp_gamma(128);
  CHECK(std::abs(ratio.mid_double() / eg.mid_double() - 1.0) < 0.01);
}

TEST_CASE("verdict strings") {
  CHECK(to_string(VerdictState::Holds) == "holds");
  CHECK(to_string(VerdictState::Fails) == "fails");
  CHECK(to_string(VerdictState::Undecided) == "undecided");
}
