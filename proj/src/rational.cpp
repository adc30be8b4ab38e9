#include "padic/rational.hpp"

#include <cctype>

namespace padic {

Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw invalid_input("bad rational: '" + std::string(text) + "' (expected n or n/d)"); };
    if (text.empty()) fail();
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) fail();
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++den_digits;
        if (den_digits == 0 || i != text.size()) fail();
    }
    Rational q(std::string(text), 10);
    if (q.get_den() == 0) throw invalid_input("bad rational: zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(long num, long den) {
    if (den == 0) throw invalid_input("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<long> ord(const Prime& p, const Rational& x) {
    if (x == 0) return std::nullopt;
    mpz_class tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), p.value().get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), p.value().get_mpz_t()));
    return vn - vd;
}

long ord_nonzero(const Prime& p, const Rational& x) {
    auto v = ord(p, x);
    if (!v) throw invalid_input("ord: value is zero");
    return *v;
}

NormValue NormValue::of(const Prime& p, const Rational& x) {
    auto v = ord(p, x);
    if (!v) return NormValue::zero(p);
    return NormValue::power(p, *v);
}

long NormValue::exponent() const {
    if (!exponent_) throw invalid_input("NormValue: zero marker has no exponent");
    return *exponent_;
}

int NormValue::compare(const NormValue& a, const NormValue& b) {
    if (a.p_ != b.p_) throw invalid_input("NormValue: mismatched primes");
    if (a.is_zero() && b.is_zero()) return 0;
    if (a.is_zero()) return -1;
    if (b.is_zero()) return 1;
    // |a| = p^-ea: smaller exponent means larger norm.
    if (*a.exponent_ == *b.exponent_) return 0;
    return *a.exponent_ > *b.exponent_ ? -1 : 1;
}

std::string NormValue::to_string() const {
    if (is_zero()) return "0";
    long e = *exponent_;
    if (e == 0) return "1";
    return p_.value().get_str() + "^" + std::to_string(-e);
}

Rational unit_part(const Prime& p, const Rational& x) {
    if (x == 0) throw invalid_input("unit_part: value is zero");
    long v = ord_nonzero(p, x);
    Rational scale;
    mpz_class pk = p.pow(static_cast<unsigned long>(v < 0 ? -v : v));
    if (v >= 0) {
        scale = Rational(1, pk);
    } else {
        scale = Rational(pk, 1);
    }
    scale.canonicalize();
    Rational r = x * scale;
    r.canonicalize();
    return r;
}

mpz_class unit_mod(const Prime& p, const Rational& x, const mpz_class& modulus) {
    Rational u = unit_part(p, x);
    mpz_class num = u.get_num() % modulus;
    if (num < 0) num += modulus;
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), u.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw internal_error("unit_mod: denominator not invertible");
    mpz_class r = (num * den_inv) % modulus;
    if (r < 0) r += modulus;
    return r;
}

mpz_class leading_digit(const Prime& p, const Rational& x) {
    return unit_mod(p, x, p.value());
}

}  // namespace padic
