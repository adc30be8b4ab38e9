#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "padic/dynamics.hpp"

namespace padic::gibbs {

using dynamics::ActivitySequence;
using dynamics::PointReport;
using cubic::D0Mode;

// Rooted Cayley tree of order k, depth n: the root has k+1 successors, every
// other vertex k.  Vertices are numbered breadth-first, so the depth-(n-1)
// subtree is exactly the id prefix.
class CayleyTree {
public:
    CayleyTree(int k, int depth);

    int order() const { return k_; }
    int depth() const { return depth_; }
    int vertex_count() const { return static_cast<int>(parent_.size()); }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
    int shell_of(int v) const { return shell_of_[static_cast<std::size_t>(v)]; }
    std::span<const int> shell(int m) const { return shells_[static_cast<std::size_t>(m)]; }
    std::span<const int> successors(int v) const { return children_[static_cast<std::size_t>(v)]; }

private:
    int k_, depth_;
    std::vector<int> parent_;
    std::vector<int> shell_of_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> shells_;
};

// Spin assignment by vertex id.  Admissible: adjacent spins never both nonzero.
struct Configuration {
    std::vector<int> spins;
};

// All admissible configurations with spins in {0..max_spin}, in lexicographic
// order by vertex id.  Throws invalid_input past the enumeration cap.
std::vector<Configuration> enumerate_admissible(const CayleyTree& tree, int max_spin,
                                                std::size_t cap = 1'000'000);

// A value that is either an exact rational or a truncated p-adic number.
// Rational-only computations stay exact; a p-adic operand promotes the other
// side to matching absolute precision.
class PValue {
public:
    PValue() : v_(Rational(0)) {}
    PValue(Rational q) : v_(std::move(q)) {}
    PValue(PAdicNumber x) : v_(std::move(x)) {}

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rat() const { return std::get<Rational>(v_); }
    const PAdicNumber& padic() const { return std::get<PAdicNumber>(v_); }

    bool is_exact_zero() const { return is_rational() && rat() == 0; }
    bool is_effective_zero() const { return !is_rational() && padic().is_zero(); }

    friend PValue operator+(const PValue& a, const PValue& b);
    friend PValue operator-(const PValue& a, const PValue& b);
    friend PValue operator*(const PValue& a, const PValue& b);
    friend PValue operator/(const PValue& a, const PValue& b);

    // |value|_p; exact for rationals, an upper bound for effective zeros.
    NormValue norm_bound(const Prime& p) const;

    std::string to_string() const;

private:
    std::variant<Rational, PAdicNumber> v_;
};

// Per-vertex, per-spin boundary values z_{i,x} (spin 0 is pinned to 1, spins
// beyond the stored support are 0).
class BoundaryLaw {
public:
    BoundaryLaw(int vertex_count, int support) : values_(static_cast<std::size_t>(vertex_count), std::vector<PValue>(static_cast<std::size_t>(support))) {}

    int support() const { return values_.empty() ? 0 : static_cast<int>(values_[0].size()); }
    PValue value(int spin, int vertex) const;
    void set(int spin, int vertex, PValue v);

private:
    std::vector<std::vector<PValue>> values_;  // [vertex][spin-1]
};

struct GibbsReport {
    PValue partition;                                   // Z_n
    std::vector<std::pair<Configuration, PValue>> distribution;  // lexicographic
    NormValue normalization_residual;                   // |sum mu - 1|
};

// Finite-volume generalized Gibbs distribution: weight(sigma) =
// prod_{x in V_n} lambda_{sigma(x)} * prod_{x in W_n} z_{sigma(x),x},
// normalized by Z_n.  lambda_0 = 1 and z_{0,x} = 1.  Throws
// degenerate_normalization when Z_n is (effectively) zero.
GibbsReport measure(const CayleyTree& tree, const Prime& p, const ActivitySequence& lambda,
                    const BoundaryLaw& law);

// Translation-invariant law z_i = lambda_i / (1+z)^k from a root z of
// z(1+z)^k = theta.
BoundaryLaw ti_law(const ActivitySequence& lambda, const PValue& z, int k, const CayleyTree& tree);

// Two-periodic law alternating with shell parity: even-shell vertices carry
// lambda_i/(1+z2)^2, odd-shell ones lambda_i/(1+z1)^2.  Swapping z1 and z2
// yields the second measure of the pair.
BoundaryLaw periodic_law(const ActivitySequence& lambda, const PValue& z1, const PValue& z2,
                         const CayleyTree& tree);

// Max residual over two checks:
//  (a) the consistency equation z_{i,x} = lambda_i prod_{y in S(x)}
//      (1 + sum_j z_{j,y})^-1 at every non-root x with successors inside the
//      volume;
//  (b) for depth >= 2, the shell-W_n sum of mu^(n) against mu^(n-1) on every
//      admissible configuration of V_{n-1}.  The consistency equation's
//      boundary values absorb the per-spin activities, while the weight
//      product carries them explicitly; the marginal comparison therefore
//      divides them back out before calling measure().
NormValue check_compatibility(const CayleyTree& tree, const Prime& p, const ActivitySequence& lambda,
                              const BoundaryLaw& law, int digits);

// Membership in E_p = {a : |a-1|_p < p^(-1/(p-1))}; the threshold resolves to
// |a-1| <= p^-1 for odd p and |a-1| <= 2^-2 for p = 2.
bool in_Ep(const Prime& p, const PValue& a);

// Smallest spin index i (some vertex x) with z_{i,x} outside E_p.  Total:
// past the activity support z_i = 0 and |0 - 1|_p = 1.
int nonexistence_witness(const Prime& p, const ActivitySequence& lambda, const BoundaryLaw& law,
                         const CayleyTree& tree);

// Counts of translation-invariant / two-periodic generalized measures for
// order two: the fixed-point and 2-cycle counts under theta = sum lambda_i,
// relabeled to the measure-side tables.
PointReport count_tiggm(const Prime& p, const ActivitySequence& lambda,
                        D0Mode mode = D0Mode::corrected, int digits = kDefaultPrecision);
PointReport count_pggm2(const Prime& p, const ActivitySequence& lambda, int digits = kDefaultPrecision);

}  // namespace padic::gibbs
