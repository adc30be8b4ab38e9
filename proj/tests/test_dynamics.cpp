#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padic/dynamics.hpp"
#include "padic/sampling.hpp"

using namespace padic;
using namespace padic::dynamics;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

long ordq(const Prime& p, const Rational& x) { return ord_nonzero(p, x); }

// |z(1+z)^2 - theta| from the held truncation, as an ord (big = tiny norm).
long fixed_residual_ord(const Prime& p, const Rational& theta, const PAdicNumber& z) {
    Rational zq = z.truncation();
    Rational r = zq * (1 + zq) * (1 + zq) - theta;
    if (r == 0) return 1000000;
    return ordq(p, r);
}

bool contains_rational(const Prime& p, const std::vector<PAdicNumber>& roots, const Rational& v, int digits) {
    PAdicNumber e = PAdicNumber::expand(p, v, digits);
    for (const auto& r : roots)
        if ((r - e).is_zero()) return true;
    return false;
}

}  // namespace

TEST_CASE("theta_of sums activities exactly") {
    CHECK(theta_of({{q(1)}}) == 1);
    CHECK(theta_of({{q(1, 3), q(2, 9), q(4, 9)}}) == 1);
    CHECK(theta_of({{}}) == 0);
}

TEST_CASE("fixed_point_sums: anchors") {
    // theta = 4: z = 1, exactly, for any p
    for (long pv : {2L, 5L, 7L}) {
        auto roots = fixed_point_sums(Prime(pv), q(4), 20);
        bool has_one = false;
        for (const auto& z : roots)
            if (!z.is_zero() && z.truncation() == 1) has_one = true;
        CHECK(has_one);
    }

    // theta = -2/27: z = -2/3 present; unique for p in {2,3,5,7}, joined by
    // two square-root partners at p = 13 (1/3 = 9 is a square mod 13)
    for (long pv : {2L, 3L, 5L, 7L}) {
        auto roots = fixed_point_sums(Prime(pv), q(-2, 27), 20);
        CHECK(roots.size() == 1);
        CHECK(contains_rational(Prime(pv), roots, q(-2, 3), 20));
    }
    CHECK(fixed_point_sums(Prime(13), q(-2, 27), 20).size() == 3);

    // theta = 2, p = 7: single root with leading digit 4
    auto r72 = fixed_point_sums(Prime(7), q(2), 20);
    REQUIRE(r72.size() == 1);
    CHECK(r72[0].valuation() == 0);
    CHECK(r72[0].digit(0) == 4);

    // boundary theta = 0: z = 0 only
    auto r0 = fixed_point_sums(Prime(5), q(0), 20);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].is_zero());

    // boundary theta = -4/27: both distinct values, -1 excluded by z != -1
    auto rb = fixed_point_sums(Prime(7), q(-4, 27), 20);
    CHECK(rb.size() == 2);
    CHECK(contains_rational(Prime(7), rb, q(-4, 3), 20));
    CHECK(contains_rational(Prime(7), rb, q(-1, 3), 20));
}

TEST_CASE("fixed-point residual bound and the z != -1 exclusion") {
    sampling::Rng rng(31);
    for (long pv : {2L, 3L, 5L, 7L, 11L}) {
        Prime p(pv);
        for (int i = 0; i < 60; ++i) {
            Rational theta = sampling::theta_on_stratum(rng, p, rng.range(-3, 3), 500);
            if (theta == 0 || theta == q(-2, 27) || theta == q(-4, 27)) continue;
            auto roots = fixed_point_sums(p, theta, 20);
            for (const auto& z : roots) {
                CHECK(fixed_residual_ord(p, theta, z) >= 20 - 3);
                CHECK_FALSE((z - PAdicNumber::expand(p, q(-1), 20)).is_zero());
            }
        }
    }
}

TEST_CASE("count_fixed: table vs oracle anchors") {
    auto r1 = count_fixed(Prime(7), q(2));
    CHECK(r1.oracle_count == 1);
    CHECK(*r1.table_count == 1);
    CHECK(r1.rule->table == TableId::n1);
    CHECK(r1.rule->row == 10);
    CHECK(r1.consistent);

    auto r2 = count_fixed(Prime(5), q(1));
    CHECK(r2.oracle_count == 0);
    CHECK(*r2.table_count == 0);
    CHECK(r2.consistent);

    // p = 3, |theta + 2/27|^2 < 27 -> unique
    auto r3 = count_fixed(Prime(3), q(25, 27));
    CHECK(*r3.table_count == 1);
    CHECK(r3.rule->table == TableId::unique3);
    CHECK(r3.rule->row == 1);
    CHECK(r3.oracle_count == 1);
    CHECK(r3.consistent);

    // p = 3, b = 29/27 sits on the |b| = 27 stratum: the printed pattern
    // conditions say no fixed point, while u^3 - 3u - 29 does have a 3-adic
    // root; the disagreement is recorded, with the oracle authoritative.
    auto r4 = count_fixed(Prime(3), q(1));
    CHECK(*r4.table_count == 0);
    CHECK(r4.oracle_count == 1);
    CHECK_FALSE(r4.consistent);

    // p = 2: oracle only; z = 1 plus the roots of z^2 + 3z + 4 (disc -7 is a
    // 2-adic square)
    auto r5 = count_fixed(Prime(2), q(4));
    CHECK_FALSE(r5.table_count.has_value());
    CHECK(r5.oracle_count == 3);
    CHECK(r5.consistent);

    // boundaries go oracle-only for p > 3
    CHECK_FALSE(count_fixed(Prime(7), q(0)).table_count.has_value());
    CHECK_FALSE(count_fixed(Prime(7), q(-2, 27)).table_count.has_value());
    CHECK_FALSE(count_fixed(Prime(7), q(-4, 27)).table_count.has_value());
}

TEST_CASE("reconstruct_fixed: weights sum back to the root") {
    Prime p(7);
    auto roots = fixed_point_sums(p, q(2), 24);
    REQUIRE(roots.size() == 1);
    const PAdicNumber& z = roots[0];

    // single entry: x_1 = z
    auto xs = reconstruct_fixed({{q(2)}}, z, 24);
    REQUIRE(xs.size() == 1);
    CHECK((xs[0] - z).is_zero());

    // equal activities: x_1 = x_2 = z/2
    auto xs2 = reconstruct_fixed({{q(1), q(1)}}, z, 24);
    REQUIRE(xs2.size() == 2);
    CHECK((xs2[0] - xs2[1]).is_zero());
    PAdicNumber sum2 = xs2[0] + xs2[1];
    CHECK((sum2 - z).is_zero());

    // theta = 1 at p = 13 with a three-entry sequence
    Prime p13(13);
    auto roots13 = fixed_point_sums(p13, q(1), 24);
    REQUIRE(roots13.size() == 1);
    auto xs3 = reconstruct_fixed({{q(1, 3), q(2, 9), q(4, 9)}}, roots13[0], 24);
    PAdicNumber total = xs3[0] + xs3[1] + xs3[2];
    CHECK((total - roots13[0]).is_zero());
}

TEST_CASE("periodic2_sums: anchors and boundary rejection") {
    CHECK(periodic2_sums(Prime(5), q(1, 5), 20).size() == 2);
    CHECK(periodic2_sums(Prime(7), q(2), 20).empty());   // legendre(-4,7) = -1
    CHECK(periodic2_sums(Prime(2), q(8), 20).empty());   // ord D odd
    CHECK_THROWS_AS(periodic2_sums(Prime(5), q(0), 20), invalid_input);
    CHECK_THROWS_AS(periodic2_sums(Prime(5), q(4), 20), invalid_input);
}

TEST_CASE("count_periodic2: p >= 3 table rows") {
    auto r1 = count_periodic2(Prime(5), q(1, 5));
    CHECK(*r1.table_count == 2);
    CHECK(r1.oracle_count == 2);
    CHECK(r1.rule->row == 1);
    CHECK(r1.consistent);

    auto r2 = count_periodic2(Prime(7), q(2));
    CHECK(*r2.table_count == 0);
    CHECK(r2.oracle_count == 0);

    auto r3 = count_periodic2(Prime(7), q(29));  // theta0 = 1, 1 - 4 = -3 = 4 mod 7, QR
    CHECK(*r3.table_count == 2);
    CHECK(r3.oracle_count == 2);
    CHECK(r3.rule->row == 4);

    // theta0 = 4 branch: theta = 4 + 49 = 53 at p = 7, s = 2 even, unit 1 QR
    auto r4 = count_periodic2(Prime(7), q(53));
    CHECK(r4.rule->row == 6);
    CHECK(*r4.table_count == 2);
    CHECK(r4.consistent);
    // theta = 4 + 7: s = 1 odd
    auto r5 = count_periodic2(Prime(7), q(11));
    CHECK(r5.rule->row == 7);
    CHECK(*r5.table_count == 0);
    CHECK(r5.consistent);
}

TEST_CASE("count_periodic2: p = 2 printed rows vs exact square testing") {
    // theta = 5: printed row 2 says two cycles, but D = 5 is 5 mod 8
    auto r5 = count_periodic2(Prime(2), q(5));
    CHECK(*r5.table_count == 2);
    CHECK(r5.rule->row == 2);
    CHECK(r5.oracle_count == 0);
    CHECK_FALSE(r5.consistent);

    // theta = 2: printed row 7 (|theta| = 1/2, theta1 = 0), D = -4 not a square
    auto r2 = count_periodic2(Prime(2), q(2));
    CHECK(*r2.table_count == 2);
    CHECK(r2.rule->row == 7);
    CHECK(r2.oracle_count == 0);
    CHECK_FALSE(r2.consistent);

    // agreeing strata: |theta| > 1 and |theta| = 1/8
    auto rbig = count_periodic2(Prime(2), q(3, 4));
    CHECK(*rbig.table_count == 2);
    CHECK(rbig.oracle_count == 2);
    CHECK(rbig.consistent);
    auto r8 = count_periodic2(Prime(2), q(8));
    CHECK(*r8.table_count == 0);
    CHECK(r8.rule->row == 12);
    CHECK(r8.consistent);

    // |theta| = 1/16: the printed condition disagrees with squares mod 8
    auto r48 = count_periodic2(Prime(2), q(48));  // 48 = 16 * 3: theta1 = 1
    CHECK(*r48.table_count == 0);
    CHECK(r48.rule->row == 14);
    CHECK(r48.oracle_count == 2);  // D = 2^6 * 33, 33 = 1 mod 8
    CHECK_FALSE(r48.consistent);
}

TEST_CASE("2-cycle invariants: Vieta, cycle law, reconstruction") {
    sampling::Rng rng(93);
    int exercised = 0;
    for (long pv : {3L, 5L, 7L, 11L, 2L}) {
        Prime p(pv);
        for (int i = 0; i < 40; ++i) {
            Rational theta = sampling::theta_on_stratum(rng, p, rng.range(-2, 3), 300);
            if (theta == 0 || theta == 4) continue;
            auto roots = periodic2_sums(p, theta, 24);
            if (roots.empty()) continue;
            ++exercised;
            REQUIRE(roots.size() == 2);
            const auto &z1 = roots[0], &z2 = roots[1];

            Rational prod = z1.truncation() * z2.truncation() - 1;
            Rational sum = z1.truncation() + z2.truncation() - (theta - 2);
            if (prod != 0) CHECK(ordq(p, prod) >= 24 - 3);
            if (sum != 0) CHECK(ordq(p, sum) >= 24 - 3);

            // f(z1) = z2, f(f(z)) = z, and neither is fixed
            PAdicNumber f1 = f_map(theta, z1);
            CHECK((f1 - z2).is_zero());
            PAdicNumber f2 = f_map(theta, f1);
            CHECK((f2 - z1).is_zero());
            CHECK_FALSE((f1 - z1).is_zero());

            // cycle reconstruction alternates under F
            ActivitySequence lambda{{theta}};
            auto [x, y] = cycle_reconstruct(lambda, z1, z2, 24);
            CHECK((x[0] - z1).is_zero());
            CHECK((y[0] - z2).is_zero());
        }
    }
    CHECK(exercised > 30);
}

TEST_CASE("f_map basics") {
    Prime p(7);
    PAdicNumber one = PAdicNumber::expand(p, q(1), 20);
    CHECK((f_map(q(4), one) - one).is_zero());
    PAdicNumber zero = PAdicNumber::zero(p, 20);
    CHECK((f_map(q(3), zero) - PAdicNumber::expand(p, q(3), 20)).is_zero());
    PAdicNumber minus_one = PAdicNumber::expand(p, q(-1), 20);
    CHECK_THROWS_AS(f_map(q(3), minus_one), effective_zero_division);
}

TEST_CASE("summarize_theta") {
    auto s = summarize_theta(Prime(2), q(5));
    CHECK(s.b == q(5) + q(2, 27));
    CHECK(*s.gamma_theta == 0);
    REQUIRE(s.theta_digits.size() == 5);
    CHECK(s.theta_digits[0] == 1);
    CHECK(s.theta_digits[2] == 1);
    CHECK(s.D_theta == q(5));
    CHECK_FALSE(summarize_theta(Prime(2), q(0)).gamma_theta.has_value());
}
