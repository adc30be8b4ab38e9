#include "padic/sampling.hpp"

#include <limits>

namespace padic::sampling {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw invalid_input("Rng::below(0)");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        std::uint64_t v = g_();
        if (v < limit) return v % n;
    }
}

long Rng::range(long lo, long hi) {
    if (hi < lo) throw invalid_input("Rng::range: empty interval");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational Rng::rational(std::uint64_t bound) {
    std::uint64_t num = 1 + below(bound);
    std::uint64_t den = 1 + below(bound);
    Rational q(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
    q.canonicalize();
    return coin() ? Rational(-q) : q;
}

Rational Rng::unit_rational(const Prime& p, std::uint64_t bound) {
    auto draw_coprime = [&] {
        for (;;) {
            std::uint64_t v = 1 + below(bound);
            if (v % static_cast<std::uint64_t>(p.to_long()) != 0) return v;
        }
    };
    std::uint64_t num = draw_coprime();
    std::uint64_t den = draw_coprime();
    Rational q(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
    q.canonicalize();
    // Reduction cannot introduce p factors, so q is still a unit.
    return coin() ? Rational(-q) : q;
}

Rational theta_on_stratum(Rng& rng, const Prime& p, long e, std::uint64_t bound) {
    Rational u = rng.unit_rational(p, bound);
    mpz_class pk = p.pow(static_cast<unsigned long>(e < 0 ? -e : e));
    Rational r = e >= 0 ? Rational(u * Rational(pk)) : Rational(u / Rational(pk));
    r.canonicalize();
    return r;
}

}  // namespace padic::sampling
