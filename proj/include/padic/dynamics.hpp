#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "padic/cubic.hpp"

namespace padic::dynamics {

using cubic::D0Mode;
using cubic::RuleId;
using cubic::TableId;

// Finitely supported activity sequence; entries[i] is the activity of spin
// i+1, spins beyond the support carry activity 0.
struct ActivitySequence {
    std::vector<Rational> entries;
};

Rational theta_of(const ActivitySequence& lambda);

// theta together with the derived quantities the criteria tables look at.
struct ThetaSummary {
    Rational theta;
    Rational b;                      // theta + 2/27
    std::optional<long> gamma_theta; // ord_p(theta); absent for theta = 0
    std::vector<long> theta_digits;  // first unit digits (up to 5), empty for 0
    Rational D_theta;                // theta^2 - 4 theta
};

ThetaSummary summarize_theta(const Prime& p, const Rational& theta);

enum class PointKind { fixed, periodic2 };

// The unit of output everywhere: the criteria-table verdict next to the
// independent root count, plus the roots themselves.
struct PointReport {
    PointKind kind = PointKind::fixed;
    std::optional<int> table_count;  // absent when no printed row applies
    int oracle_count = 0;
    std::optional<RuleId> rule;
    std::vector<PAdicNumber> roots;
    bool consistent = true;          // table_count absent or equal to oracle_count
};

// All sums z = sum x_n of fixed points of F: the roots of z(1+z)^2 = theta
// with z != -1.  theta = 0 and the two zero-discriminant values are handled
// by explicit factorization; everything else goes through the cubic oracle on
// t^3 - t/3 - (theta + 2/27), shifted back by z = t - 2/3.  Every returned
// root satisfies |z(1+z)^2 - theta|_p <= p^-digits.
std::vector<PAdicNumber> fixed_point_sums(const Prime& p, const Rational& theta, int digits);

// Fixed-point count: printed table vs. oracle.
//   p > 3 : eleven-row table on b = theta + 2/27 (a = -1/3 is a unit).
//   p = 3 : existence conditions; a fixed point, when it exists, is unique.
//   p = 2 : no printed criteria; oracle only.
// At the boundary values theta in {0, -2/27, -4/27} (b = +-2/27 makes the
// shifted cubic degenerate, b = 0 leaves the ab != 0 tables) the table side
// is reported as not applicable for p > 3.
PointReport count_fixed(const Prime& p, const Rational& theta, D0Mode mode = D0Mode::corrected,
                        int digits = kDefaultPrecision);

// x_n = lambda_n / (1+z)^2 for a verified fixed-point sum z.
std::vector<PAdicNumber> reconstruct_fixed(const ActivitySequence& lambda, const PAdicNumber& z, int digits);

// The 0 or 2 sums of 2-periodic points: roots of z^2 + (2-theta) z + 1 = 0
// via the discriminant theta^2 - 4 theta and a lifted square root.
// theta in {0, 4} is rejected: theta = 0 forces z = -1 (excluded from the
// start) and theta = 4 gives the fixed point z = 1.
std::vector<PAdicNumber> periodic2_sums(const Prime& p, const Rational& theta, int digits);

// 2-periodic count: seven-row table for p >= 3; for p = 2 the printed
// fourteen-row table is evaluated verbatim, with the oracle count
// authoritative and the consistency flag recording any disagreement.
PointReport count_periodic2(const Prime& p, const Rational& theta, int digits = kDefaultPrecision);

// The two alternating activity sequences of a 2-cycle with sums z1, z2.
std::pair<std::vector<PAdicNumber>, std::vector<PAdicNumber>> cycle_reconstruct(
    const ActivitySequence& lambda, const PAdicNumber& z1, const PAdicNumber& z2, int digits);

// f(z) = theta / (1+z)^2.
PAdicNumber f_map(const Rational& theta, const PAdicNumber& z);

// Helper shared with the gibbs module: the exact rational `x` expanded so
// that its absolute precision is at least `abs`.
PAdicNumber expand_to_absolute(const Prime& p, const Rational& x, long abs);

}  // namespace padic::dynamics
