#include "padic/residue.hpp"

namespace padic::residue {

int legendre(const mpz_class& a, const Prime& p) {
    if (!p.odd()) throw invalid_input("legendre: p = 2 is not supported");
    mpz_class r = a % p.value();
    if (r < 0) r += p.value();
    if (r == 0) return 0;
    mpz_class e = (p.value() - 1) / 2;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.value().get_mpz_t());
    return x == 1 ? 1 : -1;
}

mpz_class sqrt_mod_prime(const mpz_class& a, const Prime& p) {
    if (legendre(a, p) != 1) throw invalid_input("sqrt_mod_prime: not a residue");
    const mpz_class& q = p.value();
    mpz_class r = a % q;
    if (r < 0) r += q;
    if (q % 4 == 3) {
        mpz_class e = (q + 1) / 4, x;
        mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
        return x;
    }
    // Tonelli-Shanks. Deterministic nonresidue scan keeps runs reproducible.
    mpz_class s = q - 1;
    unsigned long e2 = mpz_scan1(s.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(s.get_mpz_t(), s.get_mpz_t(), e2);
    mpz_class z = 2;
    while (legendre(z, p) != -1) ++z;
    mpz_class c, x, t, b;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), s.get_mpz_t(), q.get_mpz_t());
    mpz_class e = (s + 1) / 2;
    mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
    mpz_powm(t.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), q.get_mpz_t());
    unsigned long m = e2;
    while (t != 1) {
        mpz_class tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            mpz_powm_ui(tt.get_mpz_t(), tt.get_mpz_t(), 2, q.get_mpz_t());
            ++i;
        }
        b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) mpz_powm_ui(b.get_mpz_t(), b.get_mpz_t(), 2, q.get_mpz_t());
        x = (x * b) % q;
        c = (b * b) % q;
        t = (t * c) % q;
        m = i;
    }
    return x;
}

bool sqrt_solvable(const Prime& p, const Rational& a) {
    if (a == 0) throw invalid_input("sqrt_solvable: a = 0 (trivial root handled by caller)");
    long v = ord_nonzero(p, a);
    if (v % 2 != 0) return false;
    if (p.odd()) return legendre(leading_digit(p, a), p) == 1;
    return unit_mod(p, a, mpz_class(8)) == 1;  // a1 = a2 = 0
}

std::pair<PAdicNumber, PAdicNumber> padic_sqrt(const Prime& p, const Rational& a, int digits) {
    if (!sqrt_solvable(p, a)) throw invalid_input("padic_sqrt: not a square in Q_p");
    long v = ord_nonzero(p, a);
    long half = v / 2;
    int work = digits + 3;
    mpz_class m = p.pow(static_cast<unsigned long>(work));
    mpz_class u = unit_mod(p, a, m);

    mpz_class r;
    if (p.odd()) {
        // Newton lifting from the mod-p root; precision doubles per step.
        r = sqrt_mod_prime(u % p.value(), p);
        int known = 1;
        while (known < work) {
            known = std::min(2 * known, work);
            mpz_class mk = p.pow(static_cast<unsigned long>(known));
            mpz_class two_r_inv;
            mpz_class two_r = (2 * r) % mk;
            if (mpz_invert(two_r_inv.get_mpz_t(), two_r.get_mpz_t(), mk.get_mpz_t()) == 0)
                throw internal_error("padic_sqrt: 2r not invertible");
            r = (r - (r * r - u) % mk * two_r_inv) % mk;
            if (r < 0) r += mk;
        }
    } else {
        // p = 2: the derivative 2x is not a unit, so lift one digit at a time:
        // a root mod 2^k extends to 2^(k+1) as r or r + 2^(k-1), k >= 3.
        r = 1;
        for (int k = 3; k < work; ++k) {
            mpz_class mk1 = p.pow(static_cast<unsigned long>(k + 1));
            mpz_class res = (r * r - u) % mk1;
            if (res < 0) res += mk1;
            if (res != 0) r += p.pow(static_cast<unsigned long>(k - 1));
        }
        r %= m;
    }

    PAdicNumber root1 = PAdicNumber::from_unit(p, half, r % p.pow(static_cast<unsigned long>(digits)), digits);
    PAdicNumber root2 = -root1;
    if (!PAdicNumber::before(root1, root2)) std::swap(root1, root2);
    return {root1, root2};
}

}  // namespace padic::residue
