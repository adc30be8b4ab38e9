#include "padic/padic_number.hpp"

#include <algorithm>

namespace padic {

namespace {

long ord_of_mpz(const Prime& p, const mpz_class& n) {
    mpz_class tmp;
    return static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.value().get_mpz_t()));
}

void check_same_prime(const PAdicNumber& x, const PAdicNumber& y) {
    if (x.prime() != y.prime()) throw invalid_input("p-adic arithmetic: mismatched primes");
}

}  // namespace

PAdicNumber PAdicNumber::zero(const Prime& p, long absolute_precision) {
    PAdicNumber z(p);
    z.zero_ = true;
    z.abs_ = absolute_precision;
    return z;
}

PAdicNumber PAdicNumber::expand(const Prime& p, const Rational& x, int digits) {
    if (digits < 1) throw invalid_input("expand: precision must be >= 1");
    if (x == 0) return zero(p, digits);
    PAdicNumber r(p);
    r.zero_ = false;
    r.val_ = ord_nonzero(p, x);
    r.prec_ = digits;
    r.abs_ = r.val_ + digits;
    r.unit_ = unit_mod(p, x, p.pow(static_cast<unsigned long>(digits)));
    return r;
}

PAdicNumber PAdicNumber::from_unit(const Prime& p, long valuation, const mpz_class& unit, int digits) {
    if (digits < 1) throw invalid_input("from_unit: precision must be >= 1");
    mpz_class m = p.pow(static_cast<unsigned long>(digits));
    mpz_class u = unit % m;
    if (u < 0) u += m;
    if (u == 0 || mpz_divisible_p(u.get_mpz_t(), p.value().get_mpz_t()))
        throw internal_error("from_unit: unit divisible by p");
    PAdicNumber r(p);
    r.zero_ = false;
    r.val_ = valuation;
    r.prec_ = digits;
    r.abs_ = valuation + digits;
    r.unit_ = u;
    return r;
}

long PAdicNumber::valuation() const {
    if (zero_) throw indeterminate_comparison("valuation of an effective zero is indeterminate");
    return val_;
}

std::vector<long> PAdicNumber::digits() const {
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(prec_));
    mpz_class u = unit_, q, r;
    for (int i = 0; i < prec_; ++i) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), p_.value().get_mpz_t());
        out.push_back(r.get_si());
        u = q;
    }
    return out;
}

long PAdicNumber::digit(int i) const {
    if (i < 0 || i >= prec_) throw invalid_input("digit index out of tracked precision");
    mpz_class u = unit_ / p_.pow(static_cast<unsigned long>(i));
    mpz_class r = u % p_.value();
    return r.get_si();
}

Rational PAdicNumber::truncation() const {
    if (zero_) return Rational(0);
    Rational u(unit_);
    mpz_class pk = p_.pow(static_cast<unsigned long>(val_ < 0 ? -val_ : val_));
    Rational r = val_ >= 0 ? Rational(u * Rational(pk)) : Rational(u / Rational(pk));
    r.canonicalize();
    return r;
}

NormValue PAdicNumber::norm() const {
    if (zero_) throw indeterminate_comparison("norm of an effective zero is indeterminate");
    return NormValue::power(p_, val_);
}

NormValue PAdicNumber::norm_upper_bound() const {
    return NormValue::power(p_, zero_ ? abs_ : val_);
}

PAdicNumber PAdicNumber::truncated_to_absolute(long abs) const {
    if (zero_) return zero(p_, std::min(abs_, abs));
    if (abs >= abs_) return *this;
    if (abs <= val_) return zero(p_, abs);
    int prec = static_cast<int>(abs - val_);
    mpz_class u = unit_ % p_.pow(static_cast<unsigned long>(prec));
    PAdicNumber r(p_);
    r.zero_ = false;
    r.val_ = val_;
    r.prec_ = prec;
    r.abs_ = abs;
    r.unit_ = u;
    return r;
}

PAdicNumber PAdicNumber::operator-() const {
    if (zero_) return *this;
    PAdicNumber r = *this;
    r.unit_ = p_.pow(static_cast<unsigned long>(prec_)) - unit_;
    return r;
}

PAdicNumber operator+(const PAdicNumber& x, const PAdicNumber& y) {
    check_same_prime(x, y);
    const Prime& p = x.prime();
    long abs = std::min(x.abs_, y.abs_);
    if (x.zero_ && y.zero_) return PAdicNumber::zero(p, abs);
    if (x.zero_) return y.truncated_to_absolute(abs);
    if (y.zero_) return x.truncated_to_absolute(abs);

    long vmin = std::min(x.val_, y.val_);
    if (abs <= vmin) return PAdicNumber::zero(p, abs);
    int window = static_cast<int>(abs - vmin);
    mpz_class m = p.pow(static_cast<unsigned long>(window));
    mpz_class sx = x.unit_ * p.pow(static_cast<unsigned long>(x.val_ - vmin));
    mpz_class sy = y.unit_ * p.pow(static_cast<unsigned long>(y.val_ - vmin));
    mpz_class s = (sx + sy) % m;
    if (s < 0) s += m;
    if (s == 0) return PAdicNumber::zero(p, abs);
    long t = ord_of_mpz(p, s);
    if (vmin + t >= abs) return PAdicNumber::zero(p, abs);
    mpz_class u = s / p.pow(static_cast<unsigned long>(t));
    return PAdicNumber::from_unit(p, vmin + t, u, static_cast<int>(abs - vmin - t));
}

PAdicNumber operator-(const PAdicNumber& x, const PAdicNumber& y) { return x + (-y); }

PAdicNumber operator*(const PAdicNumber& x, const PAdicNumber& y) {
    check_same_prime(x, y);
    const Prime& p = x.prime();
    if (x.zero_ && y.zero_) return PAdicNumber::zero(p, x.abs_ + y.abs_);
    if (x.zero_) return PAdicNumber::zero(p, x.abs_ + y.val_);
    if (y.zero_) return PAdicNumber::zero(p, y.abs_ + x.val_);
    int prec = std::min(x.prec_, y.prec_);
    mpz_class u = (x.unit_ * y.unit_) % p.pow(static_cast<unsigned long>(prec));
    return PAdicNumber::from_unit(p, x.val_ + y.val_, u, prec);
}

PAdicNumber operator/(const PAdicNumber& x, const PAdicNumber& y) {
    check_same_prime(x, y);
    const Prime& p = x.prime();
    if (y.zero_) throw effective_zero_division("division by (effective) zero");
    if (x.zero_) return PAdicNumber::zero(p, x.abs_ - y.val_);
    int prec = std::min(x.prec_, y.prec_);
    mpz_class m = p.pow(static_cast<unsigned long>(prec));
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), y.unit_.get_mpz_t(), m.get_mpz_t()) == 0)
        throw internal_error("division: unit not invertible");
    mpz_class u = (x.unit_ * inv) % m;
    return PAdicNumber::from_unit(p, x.val_ - y.val_, u, prec);
}

bool PAdicNumber::agrees_with(const PAdicNumber& other) const {
    return (*this - other).is_zero();
}

bool PAdicNumber::before(const PAdicNumber& a, const PAdicNumber& b) {
    if (a.zero_ || b.zero_) return !a.zero_ && b.zero_;  // zeros sort last
    if (a.val_ != b.val_) return a.val_ < b.val_;
    auto da = a.digits(), db = b.digits();
    return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
}

NormOrder cmp_norm(const PAdicNumber& x, const PAdicNumber& y) {
    check_same_prime(x, y);
    // Valuations of effective zeros are not determined by the held digits.
    long vx = x.valuation();
    long vy = y.valuation();
    if (vx == vy) return NormOrder::equal;
    return vx > vy ? NormOrder::less : NormOrder::greater;
}

}  // namespace padic
