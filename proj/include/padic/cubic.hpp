#pragma once

#include <optional>
#include <utility>

#include "padic/oracle.hpp"

namespace padic::cubic {

// x^3 + a x = b.  The criteria tables assume ab != 0; a = 0 / b = 0 inputs
// are routed through explicit factorization by the callers.
struct DepressedCubic {
    Rational a;
    Rational b;
};

// Which printed criteria table fired, and which row (1-based, in print order;
// row 0 = no condition matched for boolean tables).
enum class TableId { cubeq, nsol, exstp3, nsolp3, n1, unique3, nper2, tp2_dyn, tr1, tp, tp2_ggm };

struct RuleId {
    TableId table;
    int row = 0;
};

const char* table_name(TableId t);

// D0 exponent selector: `corrected` uses the discriminant form
// -4 a0^3 - 27 b0^2 (consistent with D and with exhaustive root search);
// `verbatim` reproduces the printed -4 a0^3 - 27 b0^3 for errata runs.
enum class D0Mode { corrected, verbatim };

// Derived quantities feeding the p > 3 tables (u recurrence needs p >= 5).
struct CubicAux {
    Rational a_star, b_star;        // unit parts a|a|_p, b|b|_p
    mpz_class a0, b0;               // leading digits
    mpz_class D0;                   // mod p, in [0, p)
    mpz_class u_p_minus_2;          // mod p
    Rational D;                     // -4 a*^3 - 27 b*^2, exact
    std::optional<mpz_class> d0;    // leading digit of D* (absent when D = 0)
};

CubicAux compute_aux(const Prime& p, const DepressedCubic& c, D0Mode mode = D0Mode::corrected);

// Solvability of (x^3 + ax = b) over Q_p, p > 3, ab != 0.
std::pair<bool, RuleId> solvable_gt3(const Prime& p, const DepressedCubic& c, D0Mode mode = D0Mode::corrected);

// Number of Q_p solutions (0, 1 or 3), p > 3, ab != 0.
std::pair<int, RuleId> count_gt3(const Prime& p, const DepressedCubic& c, D0Mode mode = D0Mode::corrected);

// Digit-prefix test against the canonical expansion of a 3-adic unit.
struct DigitPattern {
    std::vector<int> entries;  // each in {0,1,2}
};

bool pattern_member(const PAdicNumber& x_star, const DigitPattern& pat);

enum class DeltaSet { none, d11, d12, d13, d21, d22, d23 };

const char* delta_name(DeltaSet d);

// Membership of (a*, b*) in the union Delta = D11 u ... u D23 of linked
// digit-pattern families; pattern entries like i+1, 3+i, 2-(i+j) are reduced
// mod 3 into digit range.  Both arguments must be units with >= 4 digits.
DeltaSet delta_member(const PAdicNumber& a_star, const PAdicNumber& b_star);

// Solvability / root count over Q_3, ab != 0.
std::pair<bool, RuleId> solvable_p3(const DepressedCubic& c);
std::pair<int, RuleId> count_p3(const DepressedCubic& c);

}  // namespace padic::cubic
