#include "padic/oracle.hpp"

#include <algorithm>
#include <map>

namespace padic::cubic {

namespace {

Poly trimmed(const Poly& f) {
    Poly g = f;
    while (!g.empty() && g.back() == 0) g.pop_back();
    return g;
}

long ord_mpz_capped(const Prime& p, const mpz_class& n, long cap) {
    if (n == 0) return cap;
    mpz_class tmp;
    long v = static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.value().get_mpz_t()));
    return std::min(v, cap);
}

struct ModPoly {
    std::vector<mpz_class> c;  // ascending, reduced mod m
    mpz_class m;

    mpz_class eval(const mpz_class& x) const {
        mpz_class acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % m;
        if (acc < 0) acc += m;
        return acc;
    }
    ModPoly derivative() const {
        ModPoly d{{}, m};
        for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back((mpz_class(i) * c[i]) % m);
        return d;
    }
};

// f(p^v u) = p^e * h(u) with h having Z_p coefficients, one of them a unit.
struct Normalized {
    Poly h;     // exact rational coefficients, min ord = 0
    long e;     // scale exponent
};

Normalized normalize_at_valuation(const Prime& p, const Poly& f, long v) {
    Normalized n;
    n.h.resize(f.size());
    long e = 0;
    bool first = true;
    std::vector<Rational> scaled(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) { scaled[i] = 0; continue; }
        long shift = static_cast<long>(i) * v;
        mpz_class pk = p.pow(static_cast<unsigned long>(shift < 0 ? -shift : shift));
        Rational s = shift >= 0 ? Rational(f[i] * Rational(pk)) : Rational(f[i] / Rational(pk));
        s.canonicalize();
        scaled[i] = s;
        long o = ord_nonzero(p, s);
        if (first || o < e) { e = o; first = false; }
    }
    n.e = e;
    mpz_class pe = p.pow(static_cast<unsigned long>(e < 0 ? -e : e));
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (scaled[i] == 0) { n.h[i] = 0; continue; }
        Rational s = e >= 0 ? Rational(scaled[i] / Rational(pe)) : Rational(scaled[i] * Rational(pe));
        s.canonicalize();
        n.h[i] = s;
    }
    return n;
}

ModPoly reduce_mod(const Prime& p, const Poly& h, const mpz_class& m) {
    ModPoly mp{{}, m};
    for (const auto& c : h) {
        if (c == 0) { mp.c.emplace_back(0); continue; }
        mpz_class num = c.get_num() % m;
        if (num < 0) num += m;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
            throw internal_error("find_roots: non-invertible denominator after normalization");
        mp.c.push_back((num * inv) % m);
    }
    return mp;
}

constexpr std::size_t kWidthCap = 4096;

// All unit roots of h in Z_p, as units mod p^out_digits.
std::vector<mpz_class> unit_roots(const Prime& p, const Poly& h, int out_digits) {
    int d = degree(h);
    Rational disc = d >= 2 ? discriminant(h) : Rational(1);
    if (disc == 0) throw internal_error("unit_roots: repeated factor slipped through");
    long r_res = (d >= 2 ? ord_nonzero(p, disc) : 0) + ord_nonzero(p, h.back());
    long depth = 2 * r_res + 2;
    int work = out_digits + static_cast<int>(2 * r_res) + 6;
    mpz_class M = p.pow(static_cast<unsigned long>(work));
    ModPoly hm = reduce_mod(p, h, M);
    ModPoly hd = hm.derivative();

    std::vector<mpz_class> classes;
    for (long u0 = 1; u0 < p.to_long(); ++u0) {
        mpz_class a(u0);
        if (ord_mpz_capped(p, hm.eval(a), work) >= 1) classes.push_back(a);
    }
    // Extend every class to the proven depth; no early exit, so a class
    // holding two nearby roots keeps splitting until they separate.
    for (long level = 1; level < depth; ++level) {
        std::vector<mpz_class> next;
        mpz_class step = p.pow(static_cast<unsigned long>(level));
        for (const auto& a : classes) {
            for (long dd = 0; dd < p.to_long(); ++dd) {
                mpz_class cand = a + dd * step;
                if (ord_mpz_capped(p, hm.eval(cand), work) >= level + 1) next.push_back(cand);
            }
        }
        if (next.size() > kWidthCap) throw internal_error("find_roots: residue class width cap exceeded");
        classes = std::move(next);
    }

    std::vector<mpz_class> roots;
    mpz_class out_mod = p.pow(static_cast<unsigned long>(out_digits));
    for (mpz_class a : classes) {
        long og = ord_mpz_capped(p, hm.eval(a), work);
        long od = ord_mpz_capped(p, hd.eval(a), work);
        if (og <= 2 * od)
            throw internal_error("find_roots: ambiguous class past proven depth (discriminant assumption violated?)");
        // Newton iteration; quadratic convergence, bounded by the modulus size.
        for (int it = 0; it < 200 && og < std::min<long>(work, out_digits + od + 2); ++it) {
            mpz_class val = hm.eval(a);
            mpz_class der = hd.eval(a);
            mpz_class pd = p.pow(static_cast<unsigned long>(od));
            mpz_class w = (der / pd) % M;
            mpz_class winv;
            if (mpz_invert(winv.get_mpz_t(), w.get_mpz_t(), M.get_mpz_t()) == 0)
                throw internal_error("find_roots: derivative unit not invertible");
            mpz_class corr = ((val / pd) * winv) % M;
            a = (a - corr) % M;
            if (a < 0) a += M;
            og = ord_mpz_capped(p, hm.eval(a), work);
            od = ord_mpz_capped(p, hd.eval(a), work);
        }
        roots.push_back(a % out_mod);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

int degree(const Poly& f) {
    Poly g = trimmed(f);
    return static_cast<int>(g.size()) - 1;
}

Poly derivative(const Poly& f) {
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i) {
        Rational c = f[i] * Rational(static_cast<long>(i));
        c.canonicalize();
        d.push_back(c);
    }
    return d;
}

Rational eval(const Poly& f, const Rational& x) {
    Rational acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) { acc = acc * x + *it; }
    acc.canonicalize();
    return acc;
}

Rational discriminant(const Poly& f) {
    Poly g = trimmed(f);
    int d = static_cast<int>(g.size()) - 1;
    if (d == 2) {
        Rational r = g[1] * g[1] - 4 * g[2] * g[0];
        r.canonicalize();
        return r;
    }
    if (d == 3) {
        const Rational &a = g[3], &b = g[2], &c = g[1], &e = g[0];
        Rational r = 18 * a * b * c * e - 4 * b * b * b * e + b * b * c * c - 4 * a * c * c * c - 27 * a * a * e * e;
        r.canonicalize();
        return r;
    }
    throw invalid_input("discriminant: degree must be 2 or 3");
}

std::vector<long> newton_valuations(const Prime& p, const Poly& f) {
    Poly g = trimmed(f);
    if (g.empty()) throw invalid_input("newton_valuations: zero polynomial");
    if (g.size() > 4) throw invalid_input("newton_valuations: degree must be <= 3");
    struct Pt { long i; long o; };
    std::vector<Pt> pts;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) pts.push_back({static_cast<long>(i), ord_nonzero(p, g[i])});

    // Lower convex hull, left to right.
    std::vector<Pt> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const Pt &a = hull[hull.size() - 2], &b = hull[hull.size() - 1];
            // keep if b is strictly below segment a->pt
            if ((b.o - a.o) * (pt.i - a.i) < (pt.o - a.o) * (b.i - a.i)) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<long> vals;
    for (std::size_t s = 1; s < hull.size(); ++s) {
        long di = hull[s].i - hull[s - 1].i;
        long dy = hull[s].o - hull[s - 1].o;
        if (dy % di != 0) continue;  // fractional slope: no Q_p root at it
        vals.push_back(-dy / di);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

std::vector<PAdicNumber> find_roots(const Prime& p, const Poly& f, int digits) {
    if (digits < 1) throw invalid_input("find_roots: precision must be >= 1");
    Poly g = trimmed(f);
    int d = static_cast<int>(g.size()) - 1;
    if (d < 1 || d > 3) throw invalid_input("find_roots: degree must be in {1,2,3}");

    std::vector<PAdicNumber> roots;
    if (g[0] == 0) {
        roots.push_back(PAdicNumber::zero(p, digits));
        Poly q(g.begin() + 1, g.end());
        if (q[0] == 0) throw invalid_input("find_roots: repeated zero root; factor it out first");
        if (degree(q) >= 1) {
            auto rest = find_roots(p, q, digits);
            for (auto& r : rest)
                if (!r.is_zero()) roots.push_back(std::move(r));
        }
        std::sort(roots.begin(), roots.end(), PAdicNumber::before);
        return roots;
    }

    if (d == 1) {
        Rational r = -g[0] / g[1];
        r.canonicalize();
        return {PAdicNumber::expand(p, r, digits)};
    }

    if (discriminant(g) == 0)
        throw invalid_input("find_roots: zero discriminant; factor out a rational root first");

    for (long v : newton_valuations(p, g)) {
        Normalized n = normalize_at_valuation(p, g, v);
        int unit_digits = digits + static_cast<int>(std::max<long>(0, -n.e));
        for (const auto& u : unit_roots(p, n.h, unit_digits))
            roots.push_back(PAdicNumber::from_unit(p, v, u, unit_digits));
    }
    std::sort(roots.begin(), roots.end(), PAdicNumber::before);
    return roots;
}

}  // namespace padic::cubic
