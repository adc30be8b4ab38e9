#include "padic/gibbs.hpp"

#include <algorithm>
#include <map>

namespace padic::gibbs {

using dynamics::expand_to_absolute;

CayleyTree::CayleyTree(int k, int depth) : k_(k), depth_(depth) {
    if (k < 2) throw invalid_input("CayleyTree: order must be >= 2");
    if (depth < 0) throw invalid_input("CayleyTree: depth must be >= 0");
    parent_.push_back(-1);
    shell_of_.push_back(0);
    shells_.push_back({0});
    children_.emplace_back();
    for (int m = 1; m <= depth; ++m) {
        std::vector<int> shell;
        for (int parent : shells_[static_cast<std::size_t>(m - 1)]) {
            int fan = m == 1 ? k + 1 : k;  // the root's full neighbor set
            for (int c = 0; c < fan; ++c) {
                int id = static_cast<int>(parent_.size());
                parent_.push_back(parent);
                shell_of_.push_back(m);
                children_.emplace_back();
                children_[static_cast<std::size_t>(parent)].push_back(id);
                shell.push_back(id);
            }
        }
        shells_.push_back(std::move(shell));
    }
}

std::vector<Configuration> enumerate_admissible(const CayleyTree& tree, int max_spin, std::size_t cap) {
    if (max_spin < 0) throw invalid_input("enumerate_admissible: max_spin must be >= 0");
    std::vector<Configuration> out;
    std::vector<int> spins(static_cast<std::size_t>(tree.vertex_count()), 0);
    // Depth-first in vertex-id order: output is lexicographic.
    auto rec = [&](auto&& self, int v) -> void {
        if (v == tree.vertex_count()) {
            if (out.size() >= cap) throw invalid_input("enumerate_admissible: configuration cap exceeded");
            out.push_back(Configuration{spins});
            return;
        }
        int parent = tree.parent(v);
        bool parent_occupied = parent >= 0 && spins[static_cast<std::size_t>(parent)] != 0;
        for (int s = 0; s <= (parent_occupied ? 0 : max_spin); ++s) {
            spins[static_cast<std::size_t>(v)] = s;
            self(self, v + 1);
        }
        spins[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0);
    return out;
}

namespace {

PValue binop(const PValue& a, const PValue& b, char op) {
    if (a.is_rational() && b.is_rational()) {
        const Rational &x = a.rat(), &y = b.rat();
        Rational r;
        switch (op) {
            case '+': r = x + y; break;
            case '-': r = x - y; break;
            case '*': r = x * y; break;
            default:
                if (y == 0) throw invalid_input("PValue: division by zero rational");
                r = x / y;
        }
        r.canonicalize();
        return PValue(r);
    }
    const PAdicNumber& ref = a.is_rational() ? b.padic() : a.padic();
    const Prime& p = ref.prime();
    PAdicNumber x = a.is_rational() ? expand_to_absolute(p, a.rat(), ref.absolute_precision()) : a.padic();
    PAdicNumber y = b.is_rational() ? expand_to_absolute(p, b.rat(), ref.absolute_precision()) : b.padic();
    switch (op) {
        case '+': return PValue(x + y);
        case '-': return PValue(x - y);
        case '*': return PValue(x * y);
        default: return PValue(x / y);
    }
}

}  // namespace

PValue operator+(const PValue& a, const PValue& b) { return binop(a, b, '+'); }
PValue operator-(const PValue& a, const PValue& b) { return binop(a, b, '-'); }
PValue operator*(const PValue& a, const PValue& b) { return binop(a, b, '*'); }
PValue operator/(const PValue& a, const PValue& b) { return binop(a, b, '/'); }

NormValue PValue::norm_bound(const Prime& p) const {
    if (is_rational()) return NormValue::of(p, rat());
    return padic().norm_upper_bound();
}

std::string PValue::to_string() const {
    if (is_rational()) return rat().get_str();
    const PAdicNumber& x = padic();
    if (x.is_zero()) return "O(" + x.prime().value().get_str() + "^" + std::to_string(x.absolute_precision()) + ")";
    std::string s = x.prime().value().get_str() + "^" + std::to_string(x.valuation()) + "*(";
    auto d = x.digits();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

PValue BoundaryLaw::value(int spin, int vertex) const {
    if (spin == 0) return PValue(Rational(1));
    if (spin > support()) return PValue(Rational(0));
    return values_[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(spin - 1)];
}

void BoundaryLaw::set(int spin, int vertex, PValue v) {
    if (spin < 1 || spin > support()) throw invalid_input("BoundaryLaw::set: spin out of range");
    values_[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(spin - 1)] = std::move(v);
}

GibbsReport measure(const CayleyTree& tree, const Prime& p, const ActivitySequence& lambda,
                    const BoundaryLaw& law) {
    int max_spin = static_cast<int>(lambda.entries.size());
    auto configs = enumerate_admissible(tree, max_spin);
    auto boundary = tree.shell(tree.depth());

    std::vector<PValue> weights;
    weights.reserve(configs.size());
    PValue z(Rational(0));
    for (const auto& cfg : configs) {
        PValue w{Rational(1)};
        for (int v = 0; v < tree.vertex_count(); ++v) {
            int s = cfg.spins[static_cast<std::size_t>(v)];
            if (s > 0) w = w * PValue(lambda.entries[static_cast<std::size_t>(s - 1)]);
        }
        for (int v : boundary) {
            int s = cfg.spins[static_cast<std::size_t>(v)];
            if (s > 0) w = w * law.value(s, v);
        }
        z = z + w;
        weights.push_back(std::move(w));
    }
    if (z.is_exact_zero() || z.is_effective_zero())
        throw degenerate_normalization("measure: partition function vanishes at working precision");
    std::vector<std::pair<Configuration, PValue>> dist;
    PValue total(Rational(0));
    for (std::size_t i = 0; i < configs.size(); ++i) {
        PValue mu = weights[i] / z;
        total = total + mu;
        dist.emplace_back(configs[i], std::move(mu));
    }
    NormValue residual = (total - PValue(Rational(1))).norm_bound(p);
    return GibbsReport{std::move(z), std::move(dist), residual};
}

namespace {

PValue inv_pow_one_plus(const PValue& z, int k) {
    PValue w = PValue(Rational(1)) + z;
    if (w.is_exact_zero() || w.is_effective_zero())
        throw effective_zero_division("boundary law: 1 + z vanishes at working precision");
    PValue acc(Rational(1));
    for (int i = 0; i < k; ++i) acc = acc * w;
    return PValue(Rational(1)) / acc;
}

}  // namespace

BoundaryLaw ti_law(const ActivitySequence& lambda, const PValue& z, int k, const CayleyTree& tree) {
    PValue inv = inv_pow_one_plus(z, k);
    BoundaryLaw law(tree.vertex_count(), static_cast<int>(lambda.entries.size()));
    for (std::size_t i = 0; i < lambda.entries.size(); ++i) {
        PValue zi = PValue(lambda.entries[i]) * inv;
        for (int v = 0; v < tree.vertex_count(); ++v) law.set(static_cast<int>(i + 1), v, zi);
    }
    return law;
}

BoundaryLaw periodic_law(const ActivitySequence& lambda, const PValue& z1, const PValue& z2,
                         const CayleyTree& tree) {
    if (tree.order() != 2) throw invalid_input("periodic_law: 2-cycles arise on the order-two tree");
    PValue inv_even = inv_pow_one_plus(z2, 2);
    PValue inv_odd = inv_pow_one_plus(z1, 2);
    BoundaryLaw law(tree.vertex_count(), static_cast<int>(lambda.entries.size()));
    for (std::size_t i = 0; i < lambda.entries.size(); ++i) {
        PValue even = PValue(lambda.entries[i]) * inv_even;
        PValue odd = PValue(lambda.entries[i]) * inv_odd;
        for (int v = 0; v < tree.vertex_count(); ++v)
            law.set(static_cast<int>(i + 1), v, tree.shell_of(v) % 2 == 0 ? even : odd);
    }
    return law;
}

NormValue check_compatibility(const CayleyTree& tree, const Prime& p, const ActivitySequence& lambda,
                              const BoundaryLaw& law, int digits) {
    if (tree.depth() < 1) throw invalid_input("check_compatibility: depth must be >= 1");
    (void)digits;
    NormValue worst = NormValue::zero(p);
    int support = std::max(static_cast<int>(lambda.entries.size()), law.support());

    // (a) the consistency equation at interior non-root vertices
    for (int v = 1; v < tree.vertex_count(); ++v) {
        if (tree.shell_of(v) >= tree.depth()) continue;
        PValue denom(Rational(1));
        for (int y : tree.successors(v)) {
            PValue s(Rational(1));  // the spin-0 term
            for (int j = 1; j <= law.support(); ++j) s = s + law.value(j, y);
            denom = denom * s;
        }
        for (int i = 1; i <= support; ++i) {
            Rational li = i <= static_cast<int>(lambda.entries.size())
                              ? lambda.entries[static_cast<std::size_t>(i - 1)]
                              : Rational(0);
            PValue rhs = PValue(li) / denom;
            NormValue r = (law.value(i, v) - rhs).norm_bound(p);
            worst = NormValue::max(worst, r);
        }
    }

    // (b) marginalization against the one-level-shallower volume
    if (tree.depth() >= 2) {
        CayleyTree sub(tree.order(), tree.depth() - 1);
        auto folded = [&](const CayleyTree& t) {
            BoundaryLaw w(t.vertex_count(), static_cast<int>(lambda.entries.size()));
            for (std::size_t i = 0; i < lambda.entries.size(); ++i) {
                const Rational& li = lambda.entries[i];
                for (int v = 0; v < t.vertex_count(); ++v) {
                    PValue zi = law.value(static_cast<int>(i + 1), v);
                    w.set(static_cast<int>(i + 1), v, li == 0 ? PValue(Rational(0)) : zi / PValue(li));
                }
            }
            return w;
        };
        GibbsReport mu_n = measure(tree, p, lambda, folded(tree));
        GibbsReport mu_sub = measure(sub, p, lambda, folded(sub));

        std::map<std::vector<int>, PValue> marg;
        for (const auto& [cfg, mu] : mu_n.distribution) {
            std::vector<int> prefix(cfg.spins.begin(), cfg.spins.begin() + sub.vertex_count());
            auto it = marg.find(prefix);
            if (it == marg.end()) marg.emplace(std::move(prefix), mu);
            else it->second = it->second + mu;
        }
        for (const auto& [cfg, mu] : mu_sub.distribution) {
            auto it = marg.find(cfg.spins);
            PValue lhs = it == marg.end() ? PValue(Rational(0)) : it->second;
            worst = NormValue::max(worst, (lhs - mu).norm_bound(p));
        }
    }
    return worst;
}

bool in_Ep(const Prime& p, const PValue& a) {
    NormValue d = (a - PValue(Rational(1))).norm_bound(p);
    NormValue threshold = NormValue::power(p, p.odd() ? 1 : 2);
    return d <= threshold;
}

int nonexistence_witness(const Prime& p, const ActivitySequence& lambda, const BoundaryLaw& law,
                         const CayleyTree& tree) {
    int top = std::max(static_cast<int>(lambda.entries.size()), law.support()) + 1;
    for (int i = 1; i <= top; ++i)
        for (int v = 0; v < tree.vertex_count(); ++v)
            if (!in_Ep(p, law.value(i, v))) return i;
    throw internal_error("nonexistence_witness: no witness found (law support not finite?)");
}

PointReport count_tiggm(const Prime& p, const ActivitySequence& lambda, D0Mode mode, int digits) {
    PointReport rep = dynamics::count_fixed(p, theta_of(lambda), mode, digits);
    if (rep.rule && rep.rule->table == cubic::TableId::n1) rep.rule->table = cubic::TableId::tr1;
    return rep;
}

PointReport count_pggm2(const Prime& p, const ActivitySequence& lambda, int digits) {
    PointReport rep = dynamics::count_periodic2(p, theta_of(lambda), digits);
    if (rep.rule && rep.rule->table == cubic::TableId::nper2) rep.rule->table = cubic::TableId::tp;
    if (rep.rule && rep.rule->table == cubic::TableId::tp2_dyn) {
        // Same rows, printed in a different order in the measure-side table.
        static constexpr int remap[15] = {0, 1, 2, 3, 11, 12, 13, 4, 5, 7, 6, 7, 8, 9, 10};
        rep.rule->table = cubic::TableId::tp2_ggm;
        rep.rule->row = remap[rep.rule->row];
    }
    return rep;
}

}  // namespace padic::gibbs
