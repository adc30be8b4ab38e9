#pragma once

#include <cstdint>
#include <random>

#include "padic/rational.hpp"

namespace padic::sampling {

// Seeded generator with platform-independent draws (mt19937_64 is fully
// specified; std::uniform_int_distribution is not, so rejection sampling on
// the raw stream keeps reports byte-identical across toolchains).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t below(std::uint64_t n);          // uniform in [0, n)
    long range(long lo, long hi);                   // uniform in [lo, hi]
    bool coin() { return below(2) == 1; }

    // Uniform nonzero rational +-num/den with num, den in [1, bound].
    Rational rational(std::uint64_t bound);
    // Same, with num and den coprime to p (a p-adic unit).
    Rational unit_rational(const Prime& p, std::uint64_t bound);

private:
    std::mt19937_64 g_;
};

// theta = +-(unit) * p^e: a random unit rational placed on a chosen stratum.
Rational theta_on_stratum(Rng& rng, const Prime& p, long e, std::uint64_t bound);

}  // namespace padic::sampling
