#include "padic/dynamics.hpp"

#include <algorithm>

#include "padic/residue.hpp"

namespace padic::dynamics {

namespace {

const Rational& two_over_27() {
    static const Rational v = make_rational(2, 27);
    return v;
}

mpz_class mod_p(const mpz_class& x, const Prime& p) {
    mpz_class r = x % p.value();
    if (r < 0) r += p.value();
    return r;
}

}  // namespace

Rational theta_of(const ActivitySequence& lambda) {
    Rational s = 0;
    for (const auto& e : lambda.entries) s += e;
    s.canonicalize();
    return s;
}

ThetaSummary summarize_theta(const Prime& p, const Rational& theta) {
    ThetaSummary s;
    s.theta = theta;
    s.b = theta + two_over_27();
    s.b.canonicalize();
    s.D_theta = theta * theta - 4 * theta;
    s.D_theta.canonicalize();
    if (theta != 0) {
        s.gamma_theta = ord_nonzero(p, theta);
        auto d = PAdicNumber::expand(p, unit_part(p, theta), 5).digits();
        s.theta_digits.assign(d.begin(), d.end());
    }
    return s;
}

PAdicNumber expand_to_absolute(const Prime& p, const Rational& x, long abs) {
    if (x == 0) return PAdicNumber::zero(p, abs);
    long v = ord_nonzero(p, x);
    long digits = abs - v;
    return PAdicNumber::expand(p, x, static_cast<int>(std::max(1L, digits)));
}

std::vector<PAdicNumber> fixed_point_sums(const Prime& p, const Rational& theta, int digits) {
    if (digits < 1) throw invalid_input("fixed_point_sums: precision must be >= 1");
    std::vector<PAdicNumber> out;
    if (theta == 0) {
        // z (1+z)^2 = 0: z = 0 (z = -1 is excluded from the start).
        out.push_back(PAdicNumber::zero(p, digits));
        return out;
    }
    if (theta == make_rational(-4, 27)) {
        // b = -2/27: t^3 - t/3 + 2/27 = (t + 2/3)(t - 1/3)^2, so z = -4/3 and
        // z = -1/3 (the double root; distinct values are what count here).
        out.push_back(PAdicNumber::expand(p, make_rational(-4, 3), digits));
        out.push_back(PAdicNumber::expand(p, make_rational(-1, 3), digits));
        std::sort(out.begin(), out.end(), PAdicNumber::before);
        return out;
    }
    Rational b = theta + two_over_27();
    b.canonicalize();
    cubic::Poly f = {-b, make_rational(-1, 3), Rational(0), Rational(1)};
    auto troots = cubic::find_roots(p, f, digits);
    for (const auto& t : troots) {
        PAdicNumber shift = expand_to_absolute(p, make_rational(-2, 3), t.absolute_precision());
        PAdicNumber z = t + shift;
        out.push_back(z);
    }
    std::sort(out.begin(), out.end(), PAdicNumber::before);
    return out;
}

namespace {

// Row remap Nsol -> N1 (a = -1/3 fixes ord a = 0, so the odd-ord row
// disappears and the trailing rows shift up by one).
RuleId nsol_to_n1(RuleId r) {
    if (r.table != TableId::nsol) throw internal_error("nsol_to_n1: wrong table");
    if (r.row == 11) throw internal_error("nsol_to_n1: odd-ord row cannot fire for a = -1/3");
    return {TableId::n1, r.row == 12 ? 11 : r.row};
}

}  // namespace

PointReport count_fixed(const Prime& p, const Rational& theta, D0Mode mode, int digits) {
    PointReport rep;
    rep.kind = PointKind::fixed;
    rep.roots = fixed_point_sums(p, theta, digits);
    rep.oracle_count = static_cast<int>(rep.roots.size());

    Rational b = theta + two_over_27();
    b.canonicalize();
    bool degenerate = (b == two_over_27()) || (b == -two_over_27());  // theta = 0 or -4/27

    if (p.to_long() == 3) {
        if (degenerate) {
            // zero-discriminant boundary: the printed conditions assume
            // distinct roots, so only the oracle speaks.
        } else if (b == 0) {
            rep.table_count = 1;  // |b|^2 = 0 < 27
            rep.rule = RuleId{TableId::unique3, 1};
        } else {
            long ob = ord_nonzero(p, b);
            if (ob >= -1) {
                rep.table_count = 1;
                rep.rule = RuleId{TableId::unique3, 1};
            } else if (ob <= -6 && ob % 3 == 0) {
                PAdicNumber bs = PAdicNumber::expand(p, unit_part(p, b), 6);
                bool pat = cubic::pattern_member(bs, cubic::DigitPattern{{1, 0}}) ||
                           cubic::pattern_member(bs, cubic::DigitPattern{{2, 2}});
                rep.table_count = pat ? 1 : 0;
                rep.rule = RuleId{TableId::unique3, pat ? 2 : 3};
            } else {
                rep.table_count = 0;
                rep.rule = RuleId{TableId::unique3, 3};
            }
        }
    } else if (p.to_long() > 3) {
        if (!degenerate && b != 0) {
            auto [n, rule] = cubic::count_gt3(p, cubic::DepressedCubic{make_rational(-1, 3), b}, mode);
            rep.table_count = n;
            rep.rule = nsol_to_n1(rule);
        }
        // b = 0 leaves the ab != 0 tables; degenerate b leaves distinctness.
    }
    // p = 2: no printed criteria; oracle only.

    rep.consistent = !rep.table_count || *rep.table_count == rep.oracle_count;
    return rep;
}

std::vector<PAdicNumber> reconstruct_fixed(const ActivitySequence& lambda, const PAdicNumber& z, int digits) {
    const Prime& p = z.prime();
    PAdicNumber one = expand_to_absolute(p, Rational(1), z.absolute_precision());
    PAdicNumber w = one + z;
    if (w.is_zero())
        throw effective_zero_division("reconstruct_fixed: 1 + z is zero at working precision (theta = 0 boundary)");
    PAdicNumber wsq = w * w;
    std::vector<PAdicNumber> out;
    for (const auto& l : lambda.entries) {
        PAdicNumber ln = expand_to_absolute(p, l, wsq.absolute_precision() + 2);
        out.push_back(ln / wsq);
    }
    (void)digits;
    return out;
}

std::vector<PAdicNumber> periodic2_sums(const Prime& p, const Rational& theta, int digits) {
    if (theta == 0)
        throw invalid_input("periodic2_sums: theta = 0 forces z = -1, excluded from the start");
    if (theta == 4)
        throw invalid_input("periodic2_sums: theta = 4 gives z = 1, a fixed point, not a 2-cycle");
    Rational D = theta * theta - 4 * theta;
    D.canonicalize();
    if (!residue::sqrt_solvable(p, D)) return {};

    long ot = ord_nonzero(p, theta);
    int work = digits + 2 * static_cast<int>(ot < 0 ? -ot : ot) + 8;
    auto [r1, r2] = residue::padic_sqrt(p, D, work);
    PAdicNumber tm2 = expand_to_absolute(p, theta - 2, r1.absolute_precision());
    PAdicNumber half = expand_to_absolute(p, make_rational(1, 2), r1.absolute_precision() + 2);
    std::vector<PAdicNumber> out = {(tm2 + r1) * half, (tm2 + r2) * half};
    std::sort(out.begin(), out.end(), PAdicNumber::before);
    return out;
}

PointReport count_periodic2(const Prime& p, const Rational& theta, int digits) {
    if (theta == 0 || theta == 4) throw invalid_input("count_periodic2: theta must avoid {0, 4}");
    PointReport rep;
    rep.kind = PointKind::periodic2;
    rep.roots = periodic2_sums(p, theta, digits);
    rep.oracle_count = static_cast<int>(rep.roots.size());

    long gamma = ord_nonzero(p, theta);
    if (p.odd()) {
        auto rule = [&](int count, int row) {
            rep.table_count = count;
            rep.rule = RuleId{TableId::nper2, row};
        };
        if (gamma < 0) {
            rule(2, 1);
        } else if (gamma > 0) {
            mpz_class t0 = leading_digit(p, theta);
            if (gamma % 2 == 0 && residue::legendre(mod_p(-t0, p), p) == 1) rule(2, 2);
            else rule(0, 3);
        } else {
            mpz_class t0 = leading_digit(p, theta);
            mpz_class q = mod_p(t0 * t0 - 4 * t0, p);
            if (q != 0) {
                if (residue::legendre(q, p) == 1) rule(2, 4);
                else rule(0, 5);
            } else {
                // theta0 = 4 mod p: split off theta = 4 + theta_s p^s.
                long s = ord_nonzero(p, theta - 4);
                mpz_class w = leading_digit(p, theta - 4);
                if (s % 2 == 0 && residue::legendre(w, p) == 1) rule(2, 6);
                else rule(0, 7);
            }
        }
    } else {
        // p = 2: the printed table, row by row; the oracle stays authoritative.
        auto rule = [&](int count, int row) {
            rep.table_count = count;
            rep.rule = RuleId{TableId::tp2_dyn, row};
        };
        auto d = PAdicNumber::expand(p, unit_part(p, theta), 5).digits();
        long t1 = d[1], t2 = d[2], t3 = d[3], t4 = d[4];
        if (gamma < 0) rule(2, 1);
        else if (gamma == 0) {
            t2 == 1 ? rule(2, 2) : rule(0, 3);
        } else if (gamma >= 5) {
            if (gamma % 2 != 0) rule(0, 4);
            else if (t1 == 0 && t2 == 0) rule(2, 5);
            else rule(0, 6);
        } else if (gamma == 1) {
            t1 == 0 ? rule(2, 7) : rule(0, 8);
        } else if (gamma == 2) {
            if (t1 == 1) rule(0, 9);
            else if (t2 == 1 && t3 == 1 && t4 == 0) rule(2, 10);
            else rule(0, 11);
        } else if (gamma == 3) {
            rule(0, 12);
        } else {  // gamma == 4
            if (t1 == 0 && t2 == 1) rule(2, 13);
            else rule(0, 14);
        }
    }
    rep.consistent = !rep.table_count || *rep.table_count == rep.oracle_count;
    return rep;
}

std::pair<std::vector<PAdicNumber>, std::vector<PAdicNumber>> cycle_reconstruct(
    const ActivitySequence& lambda, const PAdicNumber& z1, const PAdicNumber& z2, int digits) {
    const Prime& p = z1.prime();
    auto weights = [&](const PAdicNumber& z) {
        PAdicNumber one = expand_to_absolute(p, Rational(1), z.absolute_precision());
        PAdicNumber w = one + z;
        if (w.is_zero()) throw effective_zero_division("cycle_reconstruct: 1 + z is zero at working precision");
        return w * w;
    };
    PAdicNumber w2 = weights(z2), w1 = weights(z1);
    std::vector<PAdicNumber> x, y;
    for (const auto& l : lambda.entries) {
        x.push_back(expand_to_absolute(p, l, w2.absolute_precision() + 2) / w2);
        y.push_back(expand_to_absolute(p, l, w1.absolute_precision() + 2) / w1);
    }
    (void)digits;
    return {x, y};
}

PAdicNumber f_map(const Rational& theta, const PAdicNumber& z) {
    const Prime& p = z.prime();
    PAdicNumber one = expand_to_absolute(p, Rational(1), z.absolute_precision());
    PAdicNumber w = one + z;
    if (w.is_zero()) throw effective_zero_division("f_map: 1 + z is zero at working precision");
    PAdicNumber num = expand_to_absolute(p, theta, (w * w).absolute_precision() + 2);
    return num / (w * w);
}

}  // namespace padic::dynamics
