#pragma once

#include <utility>

#include "padic/padic_number.hpp"

namespace padic::residue {

// Legendre symbol (a/p) via the Euler criterion, p odd.  Returns 0 when p | a
// (callers in the criteria tables never pass that case).
int legendre(const mpz_class& a, const Prime& p);

// Square root of a modulo an odd prime (Tonelli-Shanks).  Requires (a/p) = 1.
mpz_class sqrt_mod_prime(const mpz_class& a, const Prime& p);

// Whether x^2 = a has a solution in Q_p, for a != 0: ord(a) must be even and
// the unit part a quadratic residue mod p (p odd) resp. congruent to 1 mod 8
// (p = 2).
bool sqrt_solvable(const Prime& p, const Rational& a);

// Both square roots of a, lifted to `digits` unit digits.  Requires
// sqrt_solvable(p, a).  The returned roots r satisfy
// |r^2 - a|_p <= p^-(ord(a) + digits - c) with c <= 2 (c = 1 from the final
// truncation cross term at p = 2, 0 for odd p); ordered digit-lexicographically.
std::pair<PAdicNumber, PAdicNumber> padic_sqrt(const Prime& p, const Rational& a, int digits);

}  // namespace padic::residue
