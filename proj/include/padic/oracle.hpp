#pragma once

#include <vector>

#include "padic/padic_number.hpp"

namespace padic::cubic {

// Polynomial with exact rational coefficients, ascending powers:
// coeffs[i] multiplies x^i.
using Poly = std::vector<Rational>;

int degree(const Poly& f);  // -1 for the zero polynomial
Poly derivative(const Poly& f);
Rational eval(const Poly& f, const Rational& x);

// Discriminant for degree 2 or 3.
Rational discriminant(const Poly& f);

// Slopes of the lower convex hull of (i, ord c_i), negated: every valuation a
// Q_p root of f can have appears in the returned list (sorted, distinct,
// integer slopes only).  Degree <= 3, nonzero polynomial.
std::vector<long> newton_valuations(const Prime& p, const Poly& f);

// All distinct Q_p roots of f, degree in {1,2,3}, to at least `digits` unit
// digits each.  Exact root count.  For each candidate valuation v the unit
// residues mod p are enumerated and lifted; residue classes where the
// derivative vanishes mod p are extended breadth-first to depth
// 2*ord(Res(f,f'))+2, past which every surviving class is Hensel-liftable.
// Requires distinct roots: throws invalid_input when the discriminant is zero
// and no rational root was factored out by the caller (a zero constant term
// is factored out here).  Returned roots satisfy |f(r)|_p <= p^-digits and
// are sorted by valuation then digit sequence.
std::vector<PAdicNumber> find_roots(const Prime& p, const Poly& f, int digits);

}  // namespace padic::cubic
