#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "padic/prime.hpp"

namespace padic {

// Exact rationals are GMP's canonical mpq: reduced, positive denominator,
// zero stored as 0/1.  All inputs pass through parse_rational or the helpers
// below, which canonicalize.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "n" or "n/d" with an optional leading minus, unbounded decimal
// integers.  Throws invalid_input on anything else (including d = 0).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational make_rational(long num, long den = 1);

// ord_p(x); nullopt encodes +infinity (x = 0).
std::optional<long> ord(const Prime& p, const Rational& x);

// ord_p(x) for x != 0; throws invalid_input on 0.
long ord_nonzero(const Prime& p, const Rational& x);

// |x|_p stored exactly as the exponent of p^(-e), never as a float.
// The zero marker represents |0|_p = 0.
class NormValue {
public:
    static NormValue zero(const Prime& p) { return NormValue(p, std::nullopt); }
    static NormValue power(const Prime& p, long exponent) { return NormValue(p, exponent); }
    static NormValue of(const Prime& p, const Rational& x);

    const Prime& prime() const { return p_; }
    bool is_zero() const { return !exponent_.has_value(); }
    long exponent() const;  // |x|_p = p^(-exponent); throws on the zero marker

    // Magnitude comparison: |0| is the smallest value.
    static int compare(const NormValue& a, const NormValue& b);
    friend bool operator<(const NormValue& a, const NormValue& b) { return compare(a, b) < 0; }
    friend bool operator<=(const NormValue& a, const NormValue& b) { return compare(a, b) <= 0; }
    friend bool operator==(const NormValue& a, const NormValue& b) { return compare(a, b) == 0; }
    friend bool operator!=(const NormValue& a, const NormValue& b) { return compare(a, b) != 0; }
    friend bool operator>(const NormValue& a, const NormValue& b) { return compare(a, b) > 0; }
    friend bool operator>=(const NormValue& a, const NormValue& b) { return compare(a, b) >= 0; }

    static NormValue max(const NormValue& a, const NormValue& b) { return a < b ? b : a; }

    std::string to_string() const;  // "0", "1", "p^k"

private:
    NormValue(const Prime& p, std::optional<long> e) : p_(p), exponent_(e) {}
    Prime p_;
    std::optional<long> exponent_;
};

inline NormValue norm(const Prime& p, const Rational& x) { return NormValue::of(p, x); }

// x * p^ord(x), a p-adic unit, as an exact rational.  Throws on x = 0.
Rational unit_part(const Prime& p, const Rational& x);

// The unit part of x reduced modulo `modulus` (a power of p): num * den^-1.
// Requires x != 0.
mpz_class unit_mod(const Prime& p, const Rational& x, const mpz_class& modulus);

// First digit of the canonical expansion of x (= unit part mod p), in [1, p).
mpz_class leading_digit(const Prime& p, const Rational& x);

}  // namespace padic
