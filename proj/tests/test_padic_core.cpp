#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padic/padic_number.hpp"
#include "padic/sampling.hpp"

using namespace padic;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

long ord_of(const Prime& p, const Rational& x) { return ord_nonzero(p, x); }

}  // namespace

TEST_CASE("parse_rational accepts n and n/d, rejects junk") {
    CHECK(parse_rational("75") == q(75));
    CHECK(parse_rational("-3/8") == q(-3, 8));
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational("123456789012345678901234567890") ==
          Rational(mpz_class("123456789012345678901234567890")));
    CHECK_THROWS_AS(parse_rational(""), invalid_input);
    CHECK_THROWS_AS(parse_rational("1/0"), invalid_input);
    CHECK_THROWS_AS(parse_rational("a/2"), invalid_input);
    CHECK_THROWS_AS(parse_rational("1/2/3"), invalid_input);
    CHECK_THROWS_AS(parse_rational("1.5"), invalid_input);
}

TEST_CASE("Prime verifies primality") {
    CHECK(Prime(2).to_long() == 2);
    CHECK(Prime(101).to_long() == 101);
    CHECK_THROWS_AS(Prime(1), invalid_input);
    CHECK_THROWS_AS(Prime(91), invalid_input);  // 7 * 13
    CHECK(is_prime(mpz_class("2147483647")));
    CHECK_FALSE(is_prime(mpz_class("2147483649")));
}

TEST_CASE("ord: powers, denominators, zero convention") {
    CHECK(*ord(Prime(5), q(75)) == 2);
    CHECK(*ord(Prime(2), q(3, 8)) == -3);
    CHECK_FALSE(ord(Prime(7), q(0)).has_value());
    CHECK_THROWS_AS(ord_nonzero(Prime(7), q(0)), invalid_input);
}

TEST_CASE("norm: exponent form, strong triangle witness") {
    CHECK(norm(Prime(5), q(75)).exponent() == 2);
    NormValue s = norm(Prime(5), q(2 + 3));
    CHECK(s.exponent() == 1);
    CHECK(s < NormValue::max(norm(Prime(5), q(2)), norm(Prime(5), q(3))));
    CHECK(norm(Prime(3), q(-1, 3)).exponent() == -1);
    CHECK(norm(Prime(3), q(0)).is_zero());
    CHECK(norm(Prime(3), q(0)) < norm(Prime(3), q(9)));
}

TEST_CASE("expand: canonical digit expansions") {
    PAdicNumber a = PAdicNumber::expand(Prime(3), q(-1, 3), 4);
    CHECK(a.valuation() == -1);
    CHECK(a.digits() == std::vector<long>{2, 2, 2, 2});

    PAdicNumber b = PAdicNumber::expand(Prime(7), q(-1, 3), 3);
    CHECK(b.valuation() == 0);
    CHECK(b.digits() == std::vector<long>{2, 2, 2});  // 2/(1-7) = -1/3

    PAdicNumber c = PAdicNumber::expand(Prime(5), q(75), 3);
    CHECK(c.valuation() == 2);
    CHECK(c.digits() == std::vector<long>{3, 0, 0});

    CHECK(PAdicNumber::expand(Prime(5), q(0), 6).is_zero());
    CHECK_THROWS_AS(PAdicNumber::expand(Prime(5), q(1), 0), invalid_input);
}

TEST_CASE("arith: add normalizes the carry, mul and div track units") {
    Prime p5(5);
    PAdicNumber s = PAdicNumber::expand(p5, q(2), 4) + PAdicNumber::expand(p5, q(3), 4);
    CHECK(s.valuation() == 1);
    // absolute precision of either operand is 4, so the unit keeps 3 digits
    CHECK(s.precision() == 3);
    CHECK(s.digits() == std::vector<long>{1, 0, 0});

    Prime p7(7);
    PAdicNumber m = PAdicNumber::expand(p7, q(-1, 3), 3) * PAdicNumber::expand(p7, q(3), 3);
    CHECK(m.valuation() == 0);
    CHECK(m.digits() == std::vector<long>{6, 6, 6});  // -1

    PAdicNumber x = PAdicNumber::expand(p7, q(22, 7), 5);
    PAdicNumber one = x / x;
    CHECK(one.valuation() == 0);
    CHECK(one.digits() == std::vector<long>{1, 0, 0, 0, 0});
    CHECK(one.precision() == 5);
}

TEST_CASE("arith: cancellation, effective zero, division errors") {
    Prime p5(5);
    PAdicNumber x = PAdicNumber::expand(p5, q(26), 4);
    PAdicNumber y = PAdicNumber::expand(p5, q(1), 4);
    PAdicNumber d = x - y;  // 25
    CHECK(d.valuation() == 2);
    CHECK(d.precision() == 2);

    PAdicNumber z = x - x;
    CHECK(z.is_zero());
    CHECK(z.absolute_precision() == 4);
    CHECK_THROWS_AS(z.valuation(), indeterminate_comparison);
    CHECK_THROWS_AS(cmp_norm(z, y), indeterminate_comparison);
    CHECK_THROWS_AS(x / z, effective_zero_division);
    CHECK((x + z).agrees_with(x));

    CHECK_THROWS_AS(x + PAdicNumber::expand(Prime(7), q(1), 4), invalid_input);
}

TEST_CASE("unit_part and leading digit") {
    CHECK(unit_part(Prime(5), q(75)) == q(3));
    CHECK(unit_part(Prime(3), q(-1, 3)) == q(-1));
    CHECK(unit_part(Prime(7), q(56, 27)) == q(8, 27));
    CHECK(*ord(Prime(7), unit_part(Prime(7), q(56, 27))) == 0);
    CHECK(leading_digit(Prime(7), q(-1, 3)) == 2);
    CHECK_THROWS_AS(unit_part(Prime(5), q(0)), invalid_input);
}

TEST_CASE("cmp_norm implements the O/o comparison") {
    Prime p(5);
    PAdicNumber x = PAdicNumber::expand(p, q(1 - 5 + 25), 6);  // x = O[1]
    PAdicNumber one = PAdicNumber::expand(p, q(1), 6);
    CHECK(cmp_norm(x, one) == NormOrder::equal);
    CHECK(cmp_norm(x - one, one) == NormOrder::less);  // o[1] = x - 1
    CHECK(cmp_norm(x, x) == NormOrder::equal);
    CHECK(cmp_norm(one, x - one) == NormOrder::greater);
}

TEST_CASE("properties: ultrametric, multiplicativity, roundtrip, coherence") {
    for (long pv : {2L, 3L, 5L, 7L, 11L}) {
        Prime p(pv);
        sampling::Rng rng(1000 + static_cast<std::uint64_t>(pv));
        for (int i = 0; i < 1000; ++i) {
            Rational x = rng.rational(10000);
            Rational y = rng.rational(10000);

            // |xy| = |x| |y|
            CHECK(ord_of(p, x * y) == ord_of(p, x) + ord_of(p, y));

            // |x+y| <= max, equality when norms differ
            Rational s = x + y;
            long mx = std::min(ord_of(p, x), ord_of(p, y));  // max norm = min ord
            if (s != 0) {
                CHECK(ord_of(p, s) >= mx);
                if (ord_of(p, x) != ord_of(p, y)) CHECK(ord_of(p, s) == mx);
            }

            // expansion roundtrip: |x - resum| <= p^-(ord+K)
            int K = 1 + static_cast<int>(rng.below(40));
            PAdicNumber e = PAdicNumber::expand(p, x, K);
            Rational back = e.truncation();
            Rational diff = x - back;
            if (diff != 0) CHECK(ord_of(p, diff) >= ord_of(p, x) + K);

            // arithmetic coherence at effective precision
            PAdicNumber ex = PAdicNumber::expand(p, x, 20), ey = PAdicNumber::expand(p, y, 20);
            PAdicNumber sum = ex + ey;
            if (!sum.is_zero()) {
                Rational exact = x + y;
                Rational d2 = sum.truncation() - exact;
                if (d2 != 0) CHECK(ord_of(p, d2) >= sum.absolute_precision());
            }
            PAdicNumber prod = ex * ey;
            Rational d3 = prod.truncation() - x * y;
            if (d3 != 0) CHECK(ord_of(p, d3) >= prod.absolute_precision());
        }
    }
}
