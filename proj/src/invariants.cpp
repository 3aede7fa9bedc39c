#include "hibi/invariants.hpp"

#include <algorithm>
#include <bit>

namespace hibi {

namespace {

bool is_chain_poset(const Poset& p) {
    if (p.empty()) return false;
    return rank(p) == p.size() - 1;
}

// Down-set of source-poset elements (or of join-irreducibles) for each lattice
// element: the exponent pattern of its torus monomial.
std::vector<std::uint64_t> element_supports(const Lattice& l, int& ground_size) {
    if (l.ideal_map()) {
        ground_size = l.source_poset()->size();
        return *l.ideal_map();
    }
    Poset j = join_irreducibles(l);
    std::vector<int> ji;
    {
        std::vector<int> lower_count(l.size(), 0);
        for (auto [x, y] : l.covers()) lower_count[y]++;
        for (int a = 0; a < l.size(); ++a)
            if (lower_count[a] == 1) ji.push_back(a);
    }
    ground_size = static_cast<int>(ji.size());
    std::vector<std::uint64_t> masks(l.size(), 0);
    for (int a = 0; a < l.size(); ++a)
        for (size_t k = 0; k < ji.size(); ++k)
            if (l.leq(ji[k], a)) masks[a] |= 1ull << k;
    return masks;
}

}  // namespace

HibiPresentation hibi_generators(const Lattice& l, const Caps& caps) {
    if (!is_distributive(l, caps))
        throw NotDistributive("the quadratic presentation is stated for distributive lattices");

    int ground = 0;
    auto supports = element_supports(l, ground);

    HibiPresentation pres;
    pres.variable_count = l.size();
    pres.torus_weights.resize(l.size());
    for (int a = 0; a < l.size(); ++a) {
        auto& w = pres.torus_weights[a];
        w.assign(1 + ground, 0);
        w[0] = 1;  // the homogenizing variable s
        for (int k = 0; k < ground; ++k)
            if ((supports[a] >> k) & 1u) w[1 + k] = 1;
    }

    for (int a = 0; a < l.size(); ++a)
        for (int b = a + 1; b < l.size(); ++b) {
            if (l.comparable(a, b)) continue;
            BinomialGenerator g;
            g.a = static_cast<std::uint16_t>(a);
            g.b = static_cast<std::uint16_t>(b);
            g.meet = static_cast<std::uint16_t>(l.meet(a, b));
            g.join = static_cast<std::uint16_t>(l.join(a, b));
            for (int k = 0; k <= ground; ++k) {
                int lhs = pres.torus_weights[g.a][k] + pres.torus_weights[g.b][k];
                int rhs = pres.torus_weights[g.meet][k] + pres.torus_weights[g.join][k];
                if (lhs != rhs)
                    throw InternalInconsistency("generator " + l.label(a) + "*" + l.label(b) +
                                                " is not torus-weight balanced");
            }
            pres.generators.push_back(g);
        }
    return pres;
}

std::pair<int, bool> regularity(const Poset& p) {
    if (p.empty()) throw EmptyPoset("regularity of the empty poset");
    return {p.size() - rank(p), is_chain_poset(p)};
}

int a_invariant(const Poset& p) {
    if (p.empty()) throw EmptyPoset("a-invariant of the empty poset");
    return -(rank(p) + 2);
}

int krull_dim(const Poset& p) {
    if (p.empty()) throw EmptyPoset("Krull dimension of the empty poset");
    return p.size() + 1;
}

int proj_dim(const Poset& p, const Lattice& l) {
    if (p.empty()) throw EmptyPoset("projective dimension of the empty poset");
    if (!l.source_poset() || !l.source_poset()->same_structure(p))
        throw MismatchedPair("lattice was not built from this poset");
    int pd = l.size() - p.size() - 2;
    if (pd < 0)
        throw InternalInconsistency("negative projective dimension: the ideal is zero here");
    return pd;
}

bool has_linear_resolution(const Poset& p) {
    if (p.empty()) throw EmptyPoset("linear resolution test on the empty poset");
    if (!is_simple(p)) throw NotSimple("linear resolution classification assumes a simple poset");
    // Disjoint union of a chain and one isolated element.
    for (int q = 0; q < p.size(); ++q) {
        if ((p.up_mask(q) | p.down_mask(q)) != (1ull << q)) continue;  // not isolated
        Poset rest = p.induced(p.all_mask() & ~(1ull << q));
        if (!rest.empty() && rank(rest) == rest.size() - 1) return true;
    }
    return false;
}

bool is_gorenstein(const Poset& p) {
    if (p.empty()) throw EmptyPoset("Gorenstein test on the empty poset");
    return is_pure(p);
}

bool is_extremal_gorenstein(const Poset& p) {
    if (p.empty()) throw EmptyPoset("extremal Gorenstein test on the empty poset");
    return is_pure(p) && regularity(p).first == 3;
}

std::optional<int> two_chain_regularity(const Poset& p) {
    if (p.empty()) throw EmptyPoset("two-chain regularity of the empty poset");
    if (!is_simple(p)) throw NotSimple("two-chain decomposition assumes a simple poset");
    auto c1 = max_chain(p);
    std::uint64_t chain_mask = 0;
    for (int i : c1) chain_mask |= 1ull << i;
    Poset rest = p.induced(p.all_mask() & ~chain_mask);
    // Simple posets are never chains, so the remainder is nonempty.
    if (rank(rest) != rest.size() - 1) return std::nullopt;
    int value = rest.size() + 1;
    if (value != p.size() - rank(p))
        throw InternalInconsistency("two-chain value disagrees with |P| - rank P");
    return value;
}

InvariantReport analyze(const Poset& p, const Caps& caps) {
    if (p.empty()) throw EmptyPoset("cannot analyze the empty poset");
    Lattice l = ideal_lattice(p, caps);

    InvariantReport r;
    r.p_size = p.size();
    r.rank_p = rank(p);
    r.lattice_size = l.size();
    auto [reg, zero] = regularity(p);
    r.regularity = reg;
    r.ideal_is_zero = zero;
    r.krull_dim = krull_dim(p);
    r.proj_dim = l.size() - p.size() - 2;  // -1 exactly when the ideal vanishes
    r.a_invariant = a_invariant(p);
    r.flags.simple = is_simple(p);
    r.flags.pure = is_pure(p);
    r.flags.linear_resolution = !zero && reg == 2;
    r.flags.gorenstein = r.flags.pure;
    r.flags.extremal_gorenstein = r.flags.pure && reg == 3;
    return r;
}

}  // namespace hibi
