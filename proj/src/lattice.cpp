#include "hibi/lattice.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace hibi {

namespace {

std::string ideal_label(const Poset& p, std::uint64_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < p.size(); ++i)
        if ((mask >> i) & 1u) {
            if (!first) s += ",";
            s += p.label(i);
            first = false;
        }
    return s + "}";
}

}  // namespace

int Lattice::words() const { return (m_ + 63) / 64; }

bool Lattice::leq(int a, int b) const {
    return (up_[static_cast<size_t>(a) * words() + b / 64] >> (b % 64)) & 1u;
}

void Lattice::set_leq(int a, int b) {
    up_[static_cast<size_t>(a) * words() + b / 64] |= 1ull << (b % 64);
}

Lattice Lattice::from_order(const Poset& order) {
    const int m = order.size();
    if (m == 0) throw NotLattice("a lattice needs at least one element");
    Lattice l;
    l.m_ = m;
    l.labels_ = order.labels();
    l.up_.assign(static_cast<size_t>(m) * l.words(), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (order.leq(a, b)) l.set_leq(a, b);
    l.covers_ = order.covers();

    l.meet_.assign(static_cast<size_t>(m) * m, 0);
    l.join_.assign(static_cast<size_t>(m) * m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            std::uint64_t common_low = order.down_mask(a) & order.down_mask(b);
            std::uint64_t common_high = order.up_mask(a) & order.up_mask(b);
            int glb = -1, lub = -1;
            for (int x = 0; x < m; ++x) {
                if ((common_low >> x) & 1u) {
                    // greatest element of the common lower bounds
                    if ((order.up_mask(x) & common_low) == (1ull << x)) {
                        if (glb != -1) throw NotLattice("pair {" + l.labels_[a] + "," +
                                                        l.labels_[b] + "} has no unique meet");
                        glb = x;
                    }
                }
                if ((common_high >> x) & 1u) {
                    if ((order.down_mask(x) & common_high) == (1ull << x)) {
                        if (lub != -1) throw NotLattice("pair {" + l.labels_[a] + "," +
                                                        l.labels_[b] + "} has no unique join");
                        lub = x;
                    }
                }
            }
            if (glb == -1) throw NotLattice("pair {" + l.labels_[a] + "," + l.labels_[b] +
                                            "} has no meet");
            if (lub == -1) throw NotLattice("pair {" + l.labels_[a] + "," + l.labels_[b] +
                                            "} has no join");
            l.meet_[static_cast<size_t>(a) * m + b] = static_cast<std::uint16_t>(glb);
            l.meet_[static_cast<size_t>(b) * m + a] = static_cast<std::uint16_t>(glb);
            l.join_[static_cast<size_t>(a) * m + b] = static_cast<std::uint16_t>(lub);
            l.join_[static_cast<size_t>(b) * m + a] = static_cast<std::uint16_t>(lub);
        }
    l.bottom_ = l.meet_[static_cast<size_t>(0) * m + (m - 1)];
    l.top_ = l.join_[static_cast<size_t>(0) * m + (m - 1)];
    for (int x = 0; x < m; ++x) {
        l.bottom_ = l.meet(l.bottom_, x);
        l.top_ = l.join(l.top_, x);
    }
    return l;
}

Lattice Lattice::from_tables(std::vector<std::string> labels, std::vector<std::uint64_t> up_masks,
                             std::vector<std::uint16_t> meet, std::vector<std::uint16_t> join) {
    const int m = static_cast<int>(labels.size());
    if (m == 0 || m > 64 || up_masks.size() != labels.size() ||
        meet.size() != static_cast<size_t>(m) * m || join.size() != meet.size())
        throw PreconditionViolated("from_tables: inconsistent sizes");
    Lattice l;
    l.m_ = m;
    l.labels_ = std::move(labels);
    l.up_.assign(static_cast<size_t>(m) * l.words(), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if ((up_masks[a] >> b) & 1u) l.set_leq(a, b);
    l.meet_ = std::move(meet);
    l.join_ = std::move(join);
    l.bottom_ = 0;
    l.top_ = 0;
    for (int x = 0; x < m; ++x) {
        l.bottom_ = l.meet(l.bottom_, x);
        l.top_ = l.join(l.top_, x);
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::uint64_t between = 0;
            for (int k = 0; k < m; ++k)
                if (k != a && k != b && l.leq(a, k) && l.leq(k, b)) between = 1;
            if (a != b && l.leq(a, b) && !between) l.covers_.emplace_back(a, b);
        }
    return l;
}

Lattice ideal_lattice(const Poset& p, const Caps& caps) {
    auto ideals = order_ideals(p, caps);
    const int m = static_cast<int>(ideals.size());
    if (m > caps.lattice_elements)
        throw SizeCapExceeded("ideal lattice would have " + std::to_string(m) +
                              " elements, cap is " + std::to_string(caps.lattice_elements));

    Lattice l;
    l.m_ = m;
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(ideals.size());
    for (int i = 0; i < m; ++i) {
        index.emplace(ideals[i], i);
        l.labels_.push_back(ideal_label(p, ideals[i]));
    }
    l.up_.assign(static_cast<size_t>(m) * l.words(), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if ((ideals[a] & ~ideals[b]) == 0) l.set_leq(a, b);

    l.meet_.assign(static_cast<size_t>(m) * m, 0);
    l.join_.assign(static_cast<size_t>(m) * m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            int mt = index.at(ideals[a] & ideals[b]);
            int jn = index.at(ideals[a] | ideals[b]);
            l.meet_[static_cast<size_t>(a) * m + b] = static_cast<std::uint16_t>(mt);
            l.meet_[static_cast<size_t>(b) * m + a] = static_cast<std::uint16_t>(mt);
            l.join_[static_cast<size_t>(a) * m + b] = static_cast<std::uint16_t>(jn);
            l.join_[static_cast<size_t>(b) * m + a] = static_cast<std::uint16_t>(jn);
        }
    l.bottom_ = index.at(0);
    l.top_ = index.at(p.all_mask());

    // Covers in I(P) add exactly one element, so only adjacent sizes qualify.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (std::popcount(ideals[b]) == std::popcount(ideals[a]) + 1 &&
                (ideals[a] & ~ideals[b]) == 0)
                l.covers_.emplace_back(a, b);
    std::sort(l.covers_.begin(), l.covers_.end());

    l.ideal_map_ = std::move(ideals);
    l.source_ = p;
    return l;
}

Poset lattice_order_poset(const Lattice& l) {
    if (l.size() > Poset::kMaxElements)
        throw SizeCapExceeded("lattice order too large to view as a poset");
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
            if (a != b && l.leq(a, b)) rel.emplace_back(a, b);
    return Poset::from_index_relations(l.labels(), rel);
}

Poset join_irreducibles(const Lattice& l) {
    const int m = l.size();
    // Definitional route: anything that is a join of two strictly smaller
    // elements is reducible.
    std::vector<char> reducible(m, 0);
    for (int b = 0; b < m; ++b)
        for (int c = b; c < m; ++c) {
            int j = l.join(b, c);
            if (j != b && j != c) reducible[j] = 1;
        }
    std::vector<int> by_def;
    for (int a = 0; a < m; ++a)
        if (a != l.bottom() && !reducible[a]) by_def.push_back(a);

    // Cover route: join-irreducible means exactly one lower cover.
    std::vector<int> lower_count(m, 0);
    for (auto [x, y] : l.covers()) lower_count[y]++;
    std::vector<int> by_covers;
    for (int a = 0; a < m; ++a)
        if (lower_count[a] == 1) by_covers.push_back(a);

    if (by_def != by_covers)
        throw InternalInconsistency(
            "join-irreducible sets disagree between the definitional and the cover route; "
            "meet/join tables are corrupt");

    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel;
    for (int i : by_def) labels.push_back(l.label(i));
    for (size_t a = 0; a < by_def.size(); ++a)
        for (size_t b = 0; b < by_def.size(); ++b)
            if (a != b && l.leq(by_def[a], by_def[b]))
                rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Poset::from_index_relations(std::move(labels), rel);
}

bool is_distributive(const Lattice& l, const Caps& caps) {
    const int m = l.size();
    if (m > caps.distributive_elements)
        throw SizeCapExceeded("distributivity check capped at " +
                              std::to_string(caps.distributive_elements) + " elements, got " +
                              std::to_string(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = b; c < m; ++c)
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
    return true;
}

bool birkhoff_roundtrip(const Lattice& l, const Caps& caps) {
    if (!is_distributive(l, caps)) throw NotDistributive("roundtrip requires a distributive lattice");
    Poset j = join_irreducibles(l);

    // Which lattice elements became which poset elements.
    std::vector<int> ji;
    {
        std::vector<int> lower_count(l.size(), 0);
        for (auto [x, y] : l.covers()) lower_count[y]++;
        for (int a = 0; a < l.size(); ++a)
            if (lower_count[a] == 1) ji.push_back(a);
    }

    Lattice rebuilt = ideal_lattice(j, caps);
    if (rebuilt.size() != l.size()) return false;

    // Structure map: a |-> set of join-irreducibles below a. It must be an
    // order isomorphism onto the rebuilt ideal lattice.
    std::unordered_map<std::uint64_t, int> index;
    const auto& masks = *rebuilt.ideal_map();
    for (int i = 0; i < rebuilt.size(); ++i) index.emplace(masks[i], i);

    std::vector<int> image(l.size(), -1);
    std::vector<char> hit(rebuilt.size(), 0);
    for (int a = 0; a < l.size(); ++a) {
        std::uint64_t mask = 0;
        for (size_t k = 0; k < ji.size(); ++k)
            if (l.leq(ji[k], a)) mask |= 1ull << k;
        auto it = index.find(mask);
        if (it == index.end()) return false;
        if (hit[it->second]) return false;
        hit[it->second] = 1;
        image[a] = it->second;
    }
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
            if (l.leq(a, b) != rebuilt.leq(image[a], image[b])) return false;
    return true;
}

}  // namespace hibi
