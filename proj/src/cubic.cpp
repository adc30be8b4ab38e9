#include "padic/cubic.hpp"

#include "padic/residue.hpp"

namespace padic::cubic {

namespace {

mpz_class mod_p(const mpz_class& x, const Prime& p) {
    mpz_class r = x % p.value();
    if (r < 0) r += p.value();
    return r;
}

mpz_class powmod(const mpz_class& base, const mpz_class& exp, const Prime& p) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.value().get_mpz_t());
    return r;
}

void require_ab_nonzero(const DepressedCubic& c) {
    if (c.a == 0 || c.b == 0)
        throw invalid_input("cubic criteria assume ab != 0; use the factorization path");
}

// sign of 3*ord(a) - 2*ord(b): < 0 means |a|^3 > |b|^2, > 0 means |a|^3 < |b|^2.
int size_split(long oa, long ob) {
    long s = 3 * oa - 2 * ob;
    return s < 0 ? -1 : (s > 0 ? 1 : 0);
}

const Prime& three() {
    static const Prime p3(3);
    return p3;
}

}  // namespace

const char* table_name(TableId t) {
    switch (t) {
        case TableId::cubeq: return "cubeq";
        case TableId::nsol: return "Nsol";
        case TableId::exstp3: return "exstp3";
        case TableId::nsolp3: return "Nsolp3";
        case TableId::n1: return "N1";
        case TableId::unique3: return "unique";
        case TableId::nper2: return "NPer2";
        case TableId::tp2_dyn: return "Tp2-dyn";
        case TableId::tr1: return "TR1";
        case TableId::tp: return "Tp";
        case TableId::tp2_ggm: return "Tp2-ggm";
    }
    return "?";
}

const char* delta_name(DeltaSet d) {
    switch (d) {
        case DeltaSet::none: return "none";
        case DeltaSet::d11: return "D11";
        case DeltaSet::d12: return "D12";
        case DeltaSet::d13: return "D13";
        case DeltaSet::d21: return "D21";
        case DeltaSet::d22: return "D22";
        case DeltaSet::d23: return "D23";
    }
    return "?";
}

CubicAux compute_aux(const Prime& p, const DepressedCubic& c, D0Mode mode) {
    require_ab_nonzero(c);
    if (p.to_long() < 5) throw invalid_input("compute_aux: u recurrence is defined for p >= 5");
    CubicAux aux;
    aux.a_star = unit_part(p, c.a);
    aux.b_star = unit_part(p, c.b);
    aux.a0 = leading_digit(p, c.a);
    aux.b0 = leading_digit(p, c.b);
    mpz_class b0e = mode == D0Mode::corrected ? mpz_class(aux.b0 * aux.b0) : mpz_class(aux.b0 * aux.b0 * aux.b0);
    aux.D0 = mod_p(-4 * aux.a0 * aux.a0 * aux.a0 - 27 * b0e, p);

    // u1 = 0, u2 = -a0, u3 = b0, u_{n+3} = b0 u_n - a0 u_{n+1}
    mpz_class u1 = 0, u2 = mod_p(-aux.a0, p), u3 = mod_p(aux.b0, p);
    long target = p.to_long() - 2;
    if (target == 3) {
        aux.u_p_minus_2 = u3;
    } else {
        for (long i = 4; i <= target; ++i) {
            mpz_class next = mod_p(aux.b0 * u1 - aux.a0 * u2, p);
            u1 = u2;
            u2 = u3;
            u3 = next;
        }
        aux.u_p_minus_2 = u3;
    }

    aux.D = -4 * aux.a_star * aux.a_star * aux.a_star - 27 * aux.b_star * aux.b_star;
    aux.D.canonicalize();
    if (aux.D != 0) aux.d0 = leading_digit(p, aux.D);
    return aux;
}

std::pair<bool, RuleId> solvable_gt3(const Prime& p, const DepressedCubic& c, D0Mode mode) {
    require_ab_nonzero(c);
    if (p.to_long() <= 3) throw invalid_input("solvable_gt3: requires p > 3");
    long oa = ord_nonzero(p, c.a), ob = ord_nonzero(p, c.b);
    int split = size_split(oa, ob);
    if (split < 0) return {true, {TableId::cubeq, 3}};
    CubicAux aux = compute_aux(p, c, mode);
    if (split > 0) {
        if (ob % 3 != 0) return {false, {TableId::cubeq, 0}};
        mpz_class g = mpz_class(p.value() - 1) / ((p.value() - 1) % 3 == 0 ? 3 : 1);
        bool ok = powmod(aux.b0, g, p) == 1;
        return {ok, {TableId::cubeq, ok ? 1 : 0}};
    }
    mpz_class lhs = mod_p(aux.D0 * aux.u_p_minus_2 * aux.u_p_minus_2, p);
    mpz_class rhs = mod_p(9 * aux.a0 * aux.a0, p);
    bool ok = lhs != rhs;
    return {ok, {TableId::cubeq, ok ? 2 : 0}};
}

std::pair<int, RuleId> count_gt3(const Prime& p, const DepressedCubic& c, D0Mode mode) {
    require_ab_nonzero(c);
    if (p.to_long() <= 3) throw invalid_input("count_gt3: requires p > 3");
    long oa = ord_nonzero(p, c.a), ob = ord_nonzero(p, c.b);
    int split = size_split(oa, ob);
    CubicAux aux = compute_aux(p, c, mode);
    auto rule = [](int row) { return RuleId{TableId::nsol, row}; };

    if (split > 0) {  // |a|^3 < |b|^2
        if (ob % 3 != 0) return {0, rule(12)};
        if (p.value() % 3 == 1) {
            mpz_class e = (p.value() - 1) / 3;
            if (powmod(aux.b0, e, p) == 1) return {3, rule(1)};
            return {0, rule(12)};
        }
        return {1, rule(6)};
    }
    if (split < 0) {  // |a|^3 > |b|^2
        if (oa % 2 == 0) {
            bool qr = residue::legendre(mod_p(-aux.a0, p), p) == 1;
            return qr ? std::pair<int, RuleId>{3, rule(5)} : std::pair<int, RuleId>{1, rule(10)};
        }
        return {1, rule(11)};
    }
    // |a|^3 = |b|^2
    if (aux.D == 0) return {3, rule(2)};
    long oD = ord_nonzero(p, aux.D);
    if (oD > 0) {  // 0 < |D| < 1
        if (oD % 2 != 0) return {1, rule(8)};
        bool qr = residue::legendre(*aux.d0, p) == 1;
        return qr ? std::pair<int, RuleId>{3, rule(3)} : std::pair<int, RuleId>{1, rule(7)};
    }
    // |D| = 1
    if (aux.u_p_minus_2 == 0) return {3, rule(4)};
    mpz_class t = mod_p(aux.D0 * aux.u_p_minus_2 * aux.u_p_minus_2, p);
    mpz_class nine_a0sq = mod_p(9 * aux.a0 * aux.a0, p);
    if (t != 0 && t != nine_a0sq) return {1, rule(9)};
    return {0, rule(12)};
}

bool pattern_member(const PAdicNumber& x_star, const DigitPattern& pat) {
    if (x_star.is_zero() || x_star.valuation() != 0)
        throw invalid_input("pattern_member: value must be a unit");
    if (x_star.precision() < static_cast<int>(pat.entries.size()))
        throw precision_exhausted("pattern_member: pattern longer than tracked digits");
    for (std::size_t i = 0; i < pat.entries.size(); ++i)
        if (x_star.digit(static_cast<int>(i)) != pat.entries[i]) return false;
    return true;
}

namespace {

int m3(int x) { return ((x % 3) + 3) % 3; }

bool pair_match(const PAdicNumber& a, const PAdicNumber& b, std::initializer_list<int> pa,
                std::initializer_list<int> pb) {
    return pattern_member(a, DigitPattern{std::vector<int>(pa)}) &&
           pattern_member(b, DigitPattern{std::vector<int>(pb)});
}

}  // namespace

DeltaSet delta_member(const PAdicNumber& a_star, const PAdicNumber& b_star) {
    if (a_star.precision() < 4 || b_star.precision() < 4)
        throw precision_exhausted("delta_member: need at least 4 digits");
    for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
            if (pair_match(a_star, b_star, {2, i, j}, {1, 2, i, j})) return DeltaSet::d11;
            if (pair_match(a_star, b_star, {2, 1, j}, {1, 2, 1, m3(j + 1)})) return DeltaSet::d12;
            if (pair_match(a_star, b_star, {2, m3(i + 1), m3(j + 1)}, {1, 2, m3(i + 1), j})) return DeltaSet::d13;
            if (pair_match(a_star, b_star, {2, m3(i + j), i}, {1, 0, m3(2 - (i + j)), j})) return DeltaSet::d21;
            if (pair_match(a_star, b_star, {2, 0, m3(2 - j)}, {2, 0, 2, j})) return DeltaSet::d22;
            if (pair_match(a_star, b_star, {2, m3(3 + i), j}, {2, 0, m3(i - 1), m3(1 - (i + j))})) return DeltaSet::d23;
        }
    }
    return DeltaSet::none;
}

namespace {

// Shared stratum analysis for the p = 3 criteria.
struct P3Split {
    int split;        // sign of |a|^3 vs |b|^2 as in size_split
    long oa, ob;
    bool b_ord_div3;
    int split_a3;     // same for |a/3|^3 vs |b|^2 (valid when split > 0)
};

P3Split analyze_p3(const DepressedCubic& c) {
    const Prime& p = three();
    P3Split s{};
    s.oa = ord_nonzero(p, c.a);
    s.ob = ord_nonzero(p, c.b);
    s.split = size_split(s.oa, s.ob);
    s.b_ord_div3 = s.ob % 3 == 0;
    s.split_a3 = size_split(s.oa - 1, s.ob);
    return s;
}

PAdicNumber unit_expansion3(const Rational& x) { return PAdicNumber::expand(three(), unit_part(three(), x), 6); }

bool in_row5_union(const DepressedCubic& c) {
    PAdicNumber as = unit_expansion3(c.a), bs = unit_expansion3(c.b);
    if (pattern_member(as, DigitPattern{{1}})) {
        if (pattern_member(bs, DigitPattern{{1, 1}}) || pattern_member(bs, DigitPattern{{2, 1}})) return true;
    }
    return delta_member(as, bs) != DeltaSet::none;
}

bool in_row6_patterns(const DepressedCubic& c) {
    PAdicNumber bs = unit_expansion3(c.b);
    return pattern_member(bs, DigitPattern{{1, 0}}) || pattern_member(bs, DigitPattern{{2, 2}});
}

}  // namespace

std::pair<bool, RuleId> solvable_p3(const DepressedCubic& c) {
    require_ab_nonzero(c);
    P3Split s = analyze_p3(c);
    auto rule = [](int row) { return RuleId{TableId::exstp3, row}; };
    if (s.split < 0) return {true, rule(1)};
    if (s.split == 0) {
        bool ok = leading_digit(three(), c.a) == 1;
        return {ok, rule(ok ? 2 : 0)};
    }
    if (!s.b_ord_div3) return {false, rule(0)};
    if (s.split_a3 == 0) {
        bool ok = in_row5_union(c);
        return {ok, rule(ok ? 3 : 0)};
    }
    bool ok = in_row6_patterns(c);
    return {ok, rule(ok ? 4 : 0)};
}

std::pair<int, RuleId> count_p3(const DepressedCubic& c) {
    require_ab_nonzero(c);
    P3Split s = analyze_p3(c);
    auto rule = [](int row) { return RuleId{TableId::nsolp3, row}; };
    if (s.split < 0) {  // |a|^3 > |b|^2
        if (s.oa % 2 == 0) {
            bool a2 = leading_digit(three(), c.a) == 2;
            return a2 ? std::pair<int, RuleId>{3, rule(1)} : std::pair<int, RuleId>{1, rule(2)};
        }
        return {1, rule(3)};
    }
    if (s.split == 0) {
        if (leading_digit(three(), c.a) == 1) return {1, rule(4)};
        return {0, rule(7)};
    }
    if (!s.b_ord_div3) return {0, rule(7)};
    if (s.split_a3 == 0) {
        if (in_row5_union(c)) return {1, rule(5)};
        return {0, rule(7)};
    }
    if (in_row6_patterns(c)) return {1, rule(6)};
    return {0, rule(7)};
}

}  // namespace padic::cubic
