#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi::testutil {

// Builds an n-element poset from index cover pairs with labels x0..x{n-1}.
inline Poset make(int n, const std::vector<std::pair<int, int>>& rel) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    return Poset::from_index_relations(std::move(labels), rel);
}

// V-shape: two minimal elements under one top.
inline Poset v_poset() { return make(3, {{0, 2}, {1, 2}}); }

// N-shape: x0 < x2, x1 < x2, x1 < x3.
inline Poset n_poset() { return make(4, {{0, 2}, {1, 2}, {1, 3}}); }

// Bowtie: two minimal elements each under both of two maximal elements.
inline Poset bowtie() { return make(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

inline Poset two_two_chains() { return make(4, {{0, 1}, {2, 3}}); }

inline Poset chain_plus_point(int chain_len) {
    return Poset::disjoint_union(Poset::chain(chain_len), Poset::antichain(1));
}

// Independent oracle: down-sets by filtering all subsets.
inline std::vector<std::uint64_t> brute_down_sets(const Poset& p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (1ull << p.size()); ++s) {
        bool ok = true;
        for (int i = 0; i < p.size() && ok; ++i)
            if ((s >> i) & 1u)
                for (int j = 0; j < p.size(); ++j)
                    if (p.leq(j, i) && !((s >> j) & 1u)) {
                        ok = false;
                        break;
                    }
        if (ok) out.push_back(s);
    }
    return out;
}

// Independent oracle: number of order-reversing maps P -> {0..deg} by raw
// enumeration of all value vectors.
inline long long brute_order_reversing_count(const Poset& p, int deg) {
    const int n = p.size();
    std::vector<int> v(n, 0);
    long long count = 0;
    for (;;) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n; ++j)
                if (p.less(i, j) && v[j] > v[i]) {
                    ok = false;
                    break;
                }
        if (ok) ++count;
        int k = 0;
        while (k < n && v[k] == deg) v[k++] = 0;
        if (k == n) break;
        ++v[k];
    }
    return count;
}

}  // namespace hibi::testutil
