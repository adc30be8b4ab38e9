#pragma once

#include <vector>

#include "padic/rational.hpp"

namespace padic {

inline constexpr int kDefaultPrecision = 30;

enum class NormOrder { less, equal, greater };

// A truncated canonical expansion p^v * (d0 + d1 p + d2 p^2 + ...) with
// d0 != 0, stored as the valuation v plus the unit part modulo p^precision.
//
// Precision model: `precision` counts known digits of the unit part, so the
// value is pinned modulo p^(valuation + precision) =: p^absolute_precision.
// Arithmetic propagates this conservatively:
//   add/sub: absolute precision of the result = min of the operands';
//            the relative precision additionally drops by the cancellation
//            depth when leading digits annihilate.
//   mul/div: relative precision = min of the operands' relative precisions.
//
// A value whose known digits all cancel becomes an *effective zero*: it is
// indistinguishable from 0 modulo p^absolute_precision.  Effective zeros
// participate in + and * (the bound is propagated), but asking for their
// valuation, dividing by them, or norm-comparing against them raises, since
// the answer is not determined by the digits we hold.
class PAdicNumber {
public:
    // Zero known to be divisible by p^absolute_precision.
    static PAdicNumber zero(const Prime& p, long absolute_precision);

    // Truncated canonical expansion of an exact rational; digits >= 1.
    // |x - truncation()|_p <= p^-(ord(x)+digits).
    static PAdicNumber expand(const Prime& p, const Rational& x, int digits);

    // Wrap an already-reduced unit (0 < unit < p^digits, p does not divide
    // unit).  Used by root finders that work modulo p^k directly.
    static PAdicNumber from_unit(const Prime& p, long valuation, const mpz_class& unit, int digits);

    const Prime& prime() const { return p_; }
    bool is_zero() const { return zero_; }
    long valuation() const;  // throws indeterminate_comparison on effective zero
    int precision() const { return prec_; }
    long absolute_precision() const { return abs_; }
    const mpz_class& unit() const { return unit_; }

    std::vector<long> digits() const;  // length = precision(), empty for zero
    long digit(int i) const;           // i-th digit of the unit part

    // The held truncation as an exact rational: p^valuation * unit (0 for zero).
    Rational truncation() const;

    // |x|_p when the leading digit is determined; for an effective zero the
    // exact norm is unknown, so this throws.
    NormValue norm() const;
    // Known upper bound on |x|_p; total (p^-abs for effective zeros).
    NormValue norm_upper_bound() const;

    PAdicNumber operator-() const;
    friend PAdicNumber operator+(const PAdicNumber& x, const PAdicNumber& y);
    friend PAdicNumber operator-(const PAdicNumber& x, const PAdicNumber& y);
    friend PAdicNumber operator*(const PAdicNumber& x, const PAdicNumber& y);
    friend PAdicNumber operator/(const PAdicNumber& x, const PAdicNumber& y);

    // True when x - y is indistinguishable from zero at the shared precision.
    bool agrees_with(const PAdicNumber& other) const;

    // Deterministic order: by valuation, then digit sequence (zeros last).
    static bool before(const PAdicNumber& a, const PAdicNumber& b);

private:
    PAdicNumber(const Prime& p) : p_(p) {}
    PAdicNumber truncated_to_absolute(long abs) const;

    Prime p_{2};
    bool zero_ = true;
    long val_ = 0;       // meaningful only when !zero_
    int prec_ = 0;       // digits of unit part; 0 for zero
    long abs_ = 0;       // = val_+prec_ when nonzero; the zero bound otherwise
    mpz_class unit_ = 0; // in [1, p^prec_), coprime to p, when nonzero
};

// O[.]/o[.] style norm comparison: 'equal' means y = O[x] (same norm),
// 'less' means |x| < |y| (x = o[y]).  Requires determinable leading digits.
NormOrder cmp_norm(const PAdicNumber& x, const PAdicNumber& y);

}  // namespace padic
