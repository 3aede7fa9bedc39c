#include "hibi/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace hibi {

namespace {

int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }

template <typename F>
void for_each_bit(std::uint64_t m, F f) {
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        f(i);
    }
}

// Indices in a valid linear extension: strict lowers have strictly smaller
// down-sets, so sorting by |down| works and is deterministic.
std::vector<int> topo_order(const Poset& p) {
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto ca = std::popcount(p.down_mask(a)), cb = std::popcount(p.down_mask(b));
        return ca != cb ? ca < cb : a < b;
    });
    return order;
}

// Longest chain ending at each element, in cover steps.
std::vector<int> levels_below(const Poset& p) {
    std::vector<int> lvl(p.size(), 0);
    for (int i : topo_order(p)) {
        for_each_bit(p.down_mask(i) & ~(1ull << i), [&](int j) {
            lvl[i] = std::max(lvl[i], lvl[j] + 1);
        });
    }
    return lvl;
}

std::vector<int> levels_above(const Poset& p) {
    std::vector<int> lvl(p.size(), 0);
    auto order = topo_order(p);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int i = *it;
        for_each_bit(p.up_mask(i) & ~(1ull << i), [&](int j) {
            lvl[i] = std::max(lvl[i], lvl[j] + 1);
        });
    }
    return lvl;
}

}  // namespace

Poset Poset::from_index_relations(std::vector<std::string> labels,
                                  const std::vector<std::pair<int, int>>& relations) {
    const int n = static_cast<int>(labels.size());
    if (n > kMaxElements)
        throw SizeCapExceeded("poset has " + std::to_string(n) + " elements, limit is 64");
    {
        std::unordered_set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != n)
            throw PreconditionViolated("element names must be distinct");
    }

    Poset p;
    p.n_ = n;
    p.labels_ = std::move(labels);
    p.up_.assign(n, 0);
    for (int i = 0; i < n; ++i) p.up_[i] = 1ull << i;
    for (auto [lo, hi] : relations) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            throw UnknownElement("relation references an element out of range");
        if (lo == hi)
            throw CycleError("relation " + p.labels_[lo] + " < " + p.labels_[lo] +
                             " is a cycle");
        p.up_[lo] |= 1ull << hi;
    }

    // Warshall closure on the up-set rows.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((p.up_[i] >> k) & 1u) p.up_[i] |= p.up_[k];

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.leq(i, j) && p.leq(j, i))
                throw CycleError("closure forces " + p.labels_[i] + " < " + p.labels_[i] +
                                 " via " + p.labels_[j]);

    p.down_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for_each_bit(p.up_[i], [&](int j) { p.down_[j] |= 1ull << i; });

    // Transitive reduction: (i, j) is a cover iff nothing sits strictly between.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !p.leq(i, j)) continue;
            std::uint64_t between = p.up_[i] & p.down_[j] & ~(1ull << i) & ~(1ull << j);
            if (between == 0) p.covers_.emplace_back(i, j);
        }
    std::sort(p.covers_.begin(), p.covers_.end());
    return p;
}

Poset Poset::from_relations(const std::vector<std::string>& names,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) index.emplace(names[i], i);
    std::vector<std::pair<int, int>> rel;
    rel.reserve(relations.size());
    for (const auto& [lo, hi] : relations) {
        auto a = index.find(lo), b = index.find(hi);
        if (a == index.end()) throw UnknownElement("unknown element '" + lo + "'");
        if (b == index.end()) throw UnknownElement("unknown element '" + hi + "'");
        rel.emplace_back(a->second, b->second);
    }
    return from_index_relations(names, rel);
}

Poset Poset::chain(int k) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < k; ++i) {
        labels.push_back("c" + std::to_string(i));
        if (i + 1 < k) rel.emplace_back(i, i + 1);
    }
    return from_index_relations(std::move(labels), rel);
}

Poset Poset::antichain(int k) {
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("a" + std::to_string(i));
    return from_index_relations(std::move(labels), {});
}

Poset Poset::disjoint_union(const Poset& a, const Poset& b) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < a.size(); ++i) labels.push_back("l." + a.label(i));
    for (int i = 0; i < b.size(); ++i) labels.push_back("r." + b.label(i));
    for (auto [x, y] : a.covers()) rel.emplace_back(x, y);
    for (auto [x, y] : b.covers()) rel.emplace_back(x + a.size(), y + a.size());
    return from_index_relations(std::move(labels), rel);
}

Poset Poset::induced(std::uint64_t mask) const {
    std::vector<int> keep;
    for_each_bit(mask & all_mask(), [&](int i) { keep.push_back(i); });
    std::vector<std::string> labels;
    for (int i : keep) labels.push_back(labels_[i]);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < static_cast<int>(keep.size()); ++a)
        for (int b = 0; b < static_cast<int>(keep.size()); ++b)
            if (a != b && leq(keep[a], keep[b])) rel.emplace_back(a, b);
    return from_index_relations(std::move(labels), rel);
}

bool Poset::is_down_set(std::uint64_t mask) const {
    std::uint64_t need = 0;
    for_each_bit(mask, [&](int i) { need |= down_[i]; });
    return (need & ~mask) == 0;
}

bool Poset::same_structure(const Poset& other) const {
    return n_ == other.n_ && labels_ == other.labels_ && up_ == other.up_;
}

int rank(const Poset& p) {
    if (p.empty()) throw EmptyPoset("rank of the empty poset");
    auto lvl = levels_below(p);
    return *std::max_element(lvl.begin(), lvl.end());
}

bool is_pure(const Poset& p) {
    if (p.empty()) throw EmptyPoset("purity of the empty poset");
    const int n = p.size();
    const int r = rank(p);
    // Achievable lengths of maximal ascending cover-paths from each element,
    // as a bitmask of lengths. Pure means every source reaches exactly {r}.
    std::vector<std::uint64_t> upper_covers(n, 0), lengths(n, 0);
    for (auto [a, b] : p.covers()) upper_covers[a] |= 1ull << b;
    auto order = topo_order(p);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int i = *it;
        if (upper_covers[i] == 0) {
            lengths[i] = 1;  // the empty ascent
        } else {
            for_each_bit(upper_covers[i], [&](int j) { lengths[i] |= lengths[j] << 1; });
        }
    }
    for (int i = 0; i < n; ++i) {
        bool minimal = (p.down_mask(i) & ~(1ull << i)) == 0;
        if (minimal && lengths[i] != (1ull << r)) return false;
    }
    return true;
}

bool is_simple(const Poset& p) {
    if (p.empty()) throw EmptyPoset("simplicity of the empty poset");
    for (int i = 0; i < p.size(); ++i)
        if ((p.up_mask(i) | p.down_mask(i)) == p.all_mask()) return false;
    return true;
}

Poset simplify(const Poset& p) {
    if (p.empty()) throw EmptyPoset("simplify of the empty poset");
    Poset cur = p;
    for (;;) {
        std::uint64_t keep = 0;
        for (int i = 0; i < cur.size(); ++i)
            if ((cur.up_mask(i) | cur.down_mask(i)) != cur.all_mask()) keep |= 1ull << i;
        if (keep == cur.all_mask()) return cur;
        cur = cur.induced(keep);
        if (cur.empty()) return cur;
    }
}

bool ideal_mask_less(std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    // Lexicographic on the ascending index sequences: the mask owning the
    // lowest differing bit is the smaller one.
    return (a >> lowest_bit(a ^ b)) & 1u;
}

std::vector<std::uint64_t> order_ideals(const Poset& p, const Caps& caps) {
    if (p.size() > caps.ideal_elements)
        throw SizeCapExceeded("down-set enumeration capped at " +
                              std::to_string(caps.ideal_elements) + " elements, got " +
                              std::to_string(p.size()));
    std::vector<std::uint64_t> out;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier{0};
    seen.insert(0);
    // Grow from the empty ideal by adding minimal elements of the complement.
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t s : frontier) {
            out.push_back(s);
            for (int i = 0; i < p.size(); ++i) {
                if ((s >> i) & 1u) continue;
                if ((p.down_mask(i) & ~(1ull << i) & ~s) != 0) continue;
                std::uint64_t t = s | (1ull << i);
                if (seen.insert(t).second) next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), ideal_mask_less);
    return out;
}

DepthFunction depth_function(const Poset& p) {
    if (p.empty()) throw EmptyPoset("depth function of the empty poset");
    DepthFunction d;
    auto above = levels_above(p);
    d.element_values.resize(p.size());
    int deepest = 0;
    for (int i = 0; i < p.size(); ++i) {
        d.element_values[i] = above[i] + 1;  // one extra step up to TOP
        deepest = std::max(deepest, d.element_values[i]);
    }
    d.top_value = 0;
    d.bottom_value = deepest + 1;
    return d;
}

std::vector<int> max_chain(const Poset& p) {
    if (p.empty()) throw EmptyPoset("max chain of the empty poset");
    auto above = levels_above(p);
    auto below = levels_below(p);
    const int r = rank(p);
    std::vector<int> chain;
    int cur = -1;
    for (int i = 0; i < p.size(); ++i)
        if (below[i] == 0 && above[i] == r) {
            cur = i;
            break;
        }
    chain.push_back(cur);
    for (int remaining = r; remaining > 0; --remaining) {
        int next = -1;
        for_each_bit(p.up_mask(cur) & ~(1ull << cur), [&](int j) {
            if (above[j] == remaining - 1 && next == -1) next = j;
        });
        chain.push_back(next);
        cur = next;
    }
    return chain;
}

namespace {

// Iterated partition refinement: vertex classes that any isomorphism must
// preserve, numbered in a label-independent order.
std::vector<int> refine_classes(const Poset& p) {
    const int n = p.size();
    std::vector<std::uint64_t> lower_covers(n, 0), upper_covers(n, 0);
    for (auto [a, b] : p.covers()) {
        upper_covers[a] |= 1ull << b;
        lower_covers[b] |= 1ull << a;
    }
    auto below = levels_below(p);
    auto above = levels_above(p);

    std::vector<std::vector<int>> keys(n);
    for (int i = 0; i < n; ++i)
        keys[i] = {std::popcount(p.down_mask(i)), std::popcount(p.up_mask(i)),
                   std::popcount(lower_covers[i]), std::popcount(upper_covers[i]),
                   below[i], above[i]};

    std::vector<int> cls(n, 0);
    int classes = 0;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<int>> sorted_keys = keys;
        std::sort(sorted_keys.begin(), sorted_keys.end());
        sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()),
                          sorted_keys.end());
        for (int i = 0; i < n; ++i)
            cls[i] = static_cast<int>(std::lower_bound(sorted_keys.begin(), sorted_keys.end(),
                                                       keys[i]) -
                                      sorted_keys.begin());
        int now = static_cast<int>(sorted_keys.size());
        if (now == classes) break;
        classes = now;
        for (int i = 0; i < n; ++i) {
            std::vector<int> lo, hi;
            for_each_bit(lower_covers[i], [&](int j) { lo.push_back(cls[j]); });
            for_each_bit(upper_covers[i], [&](int j) { hi.push_back(cls[j]); });
            std::sort(lo.begin(), lo.end());
            std::sort(hi.begin(), hi.end());
            keys[i] = {cls[i]};
            keys[i].push_back(-1);
            keys[i].insert(keys[i].end(), lo.begin(), lo.end());
            keys[i].push_back(-1);
            keys[i].insert(keys[i].end(), hi.begin(), hi.end());
        }
    }
    return cls;
}

struct CanonSearch {
    const Poset& p;
    std::vector<int> cell_of_position;      // class required at each position
    std::vector<std::vector<int>> members;  // class -> vertices
    std::vector<int> perm;
    std::uint64_t used = 0;
    CanonicalKey key;

    explicit CanonSearch(const Poset& poset) : p(poset) {}

    // Relation chunk of vertex v against the already-placed prefix.
    std::uint64_t encode(int v, int depth) const {
        std::uint64_t down = 0, up = 0;
        for (int j = 0; j < depth; ++j) {
            if (p.less(perm[j], v)) down |= 1ull << j;
            if (p.less(v, perm[j])) up |= 1ull << j;
        }
        return down | (up << 32);
    }

    // Two unused vertices are twins when swapping them is an automorphism;
    // exploring both would only duplicate work.
    bool twins(int u, int v) const {
        std::uint64_t s = (1ull << u) | (1ull << v);
        if (p.comparable(u, v)) return false;
        return (p.up_mask(u) & ~s) == (p.up_mask(v) & ~s) &&
               (p.down_mask(u) & ~s) == (p.down_mask(v) & ~s);
    }

    void run(int depth, CanonicalKey& best, bool& have_best) {
        const int n = p.size();
        if (depth == n) {
            if (!have_best || key < best) {
                best = key;
                have_best = true;
            }
            return;
        }
        std::uint64_t min_chunk = ~0ull;
        std::vector<int> tied;
        for (int v : members[cell_of_position[depth]]) {
            if ((used >> v) & 1u) continue;
            std::uint64_t c = encode(v, depth);
            if (c < min_chunk) {
                min_chunk = c;
                tied.clear();
            }
            if (c == min_chunk) tied.push_back(v);
        }
        // Only minimal chunks can start a minimal completion; prune twins.
        std::vector<int> branch;
        for (int v : tied) {
            bool dup = false;
            for (int u : branch)
                if (twins(u, v)) {
                    dup = true;
                    break;
                }
            if (!dup) branch.push_back(v);
        }
        key.push_back(min_chunk);
        for (int v : branch) {
            perm[depth] = v;
            used |= 1ull << v;
            run(depth + 1, best, have_best);
            used &= ~(1ull << v);
        }
        key.pop_back();
    }
};

}  // namespace

CanonicalKey canonical_form(const Poset& p, const Caps& caps) {
    const int n = p.size();
    if (n > caps.iso_elements || n > 32)
        throw SizeCapExceeded("canonical form capped at " +
                              std::to_string(std::min(caps.iso_elements, 32)) +
                              " elements, got " + std::to_string(n));
    if (n == 0) return {};
    auto cls = refine_classes(p);
    CanonSearch search(p);
    int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;
    search.members.resize(num_classes);
    for (int i = 0; i < n; ++i) search.members[cls[i]].push_back(i);
    for (int c = 0; c < num_classes; ++c)
        for (size_t k = 0; k < search.members[c].size(); ++k)
            search.cell_of_position.push_back(c);
    search.perm.assign(n, -1);

    CanonicalKey best;
    bool have_best = false;
    search.run(0, best, have_best);
    return best;
}

bool is_isomorphic(const Poset& a, const Poset& b, const Caps& caps) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto ca = refine_classes(a), cb = refine_classes(b);
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
    return canonical_form(a, caps) == canonical_form(b, caps);
}

}  // namespace hibi
