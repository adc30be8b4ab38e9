#include "padic/prime.hpp"

#include <array>

namespace padic {

namespace {

bool miller_rabin_witness(const mpz_class& n, const mpz_class& d, unsigned long r, const mpz_class& a) {
    if (a % n == 0) return false;  // base divisible by n: no information, not a witness
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 0; i + 1 < r; ++i) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n - 1) return false;
    }
    return true;  // composite witnessed
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == q) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(q))) return false;
    }
    // Deterministic for n < 3,317,044,064,679,887,385,961,981 with this base set.
    static const mpz_class bound("3317044064679887385961981");
    if (n >= bound) throw invalid_input("primality check: candidate exceeds deterministic range");

    mpz_class d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (miller_rabin_witness(n, d, r, mpz_class(a))) return false;
    }
    return true;
}

Prime::Prime(const mpz_class& p) : p_(p) {
    if (!p_.fits_slong_p()) throw invalid_input("prime too large (must fit in 64 bits)");
    if (!is_prime(p_)) throw invalid_input("not a prime: " + p_.get_str());
    p_long_ = p_.get_si();
}

mpz_class Prime::pow(unsigned long k) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p_.get_mpz_t(), k);
    return r;
}

}  // namespace padic
