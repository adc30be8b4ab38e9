#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "padic/errors.hpp"

namespace padic {

// Deterministic Miller-Rabin.  Valid for n < 3.317e24 (fixed base set);
// larger candidates are rejected as out of supported range.
bool is_prime(const mpz_class& n);

// A verified prime modulus.  Construction checks primality, so every API
// taking a Prime can assume it.  Bounded to fit in a signed 64-bit value so
// digits are always serializable as plain integers.
class Prime {
public:
    explicit Prime(long p) : Prime(mpz_class(p)) {}
    explicit Prime(const mpz_class& p);

    const mpz_class& value() const { return p_; }
    long to_long() const { return p_long_; }
    bool odd() const { return p_long_ != 2; }

    // p^k as an exact integer, k >= 0.
    mpz_class pow(unsigned long k) const;

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_long_ == b.p_long_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return !(a == b); }

private:
    mpz_class p_;
    long p_long_ = 0;
};

}  // namespace padic
