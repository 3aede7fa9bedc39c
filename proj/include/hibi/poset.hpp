#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hibi/caps.hpp"
#include "hibi/errors.hpp"

namespace hibi {

// Finite poset on elements 0..n-1. The order relation is stored as one up-set
// bitmask per element (self included), so closure queries, down-set tests and
// purity checks are single bit operations. Immutable after construction.
class Poset {
  public:
    static constexpr int kMaxElements = 64;

    // Builds from an arbitrary generating set of index pairs (lo, hi).
    // Computes the reflexive-transitive closure and the transitive reduction;
    // rejects cycles.
    static Poset from_index_relations(std::vector<std::string> labels,
                                      const std::vector<std::pair<int, int>>& relations);

    // Same, with relations given by element names.
    static Poset from_relations(const std::vector<std::string>& names,
                                const std::vector<std::pair<std::string, std::string>>& relations);

    static Poset chain(int k);
    static Poset antichain(int k);
    static Poset disjoint_union(const Poset& a, const Poset& b);

    Poset() = default;  // the empty poset

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }

    bool leq(int a, int b) const { return (up_[a] >> b) & 1u; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    // Up-set / down-set of an element, self included.
    std::uint64_t up_mask(int i) const { return up_[i]; }
    std::uint64_t down_mask(int i) const { return down_[i]; }
    std::uint64_t all_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

    // Hasse diagram, sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    // Restriction to the elements of `mask`, labels preserved, covers recomputed.
    Poset induced(std::uint64_t mask) const;

    // true iff `mask` is downward closed.
    bool is_down_set(std::uint64_t mask) const;

    bool same_structure(const Poset& other) const;

  private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> up_;    // up_[i] = { j : i <= j }
    std::vector<std::uint64_t> down_;  // down_[i] = { j : j <= i }
    std::vector<std::pair<int, int>> covers_;
};

// Depth function on the bounded extension P^ = P + {BOTTOM, TOP}:
// delta(p) = longest chain ascending from p, so delta(TOP) = 0 and
// delta(BOTTOM) = rank(P) + 2. Strictly order-reversing by construction.
struct DepthFunction {
    std::vector<int> element_values;  // one per element of P
    int bottom_value = 0;
    int top_value = 0;

    int value(int i) const { return element_values[i]; }
    int bottom() const { return bottom_value; }
    int top() const { return top_value; }
};

// Canonical key: equal for isomorphic posets, distinct otherwise (within the
// iso cap). Lexicographically minimal incremental encoding of the strict order.
using CanonicalKey = std::vector<std::uint64_t>;

int rank(const Poset& p);
bool is_pure(const Poset& p);
bool is_simple(const Poset& p);

// Iteratively removes every element comparable to all others; the residual
// poset is simple or empty (chains drain completely).
Poset simplify(const Poset& p);

// All down-sets as bitmasks, sorted by size then lexicographically on the
// ascending index sequences. Deterministic, suitable for golden tests.
std::vector<std::uint64_t> order_ideals(const Poset& p, const Caps& caps = default_caps());

DepthFunction depth_function(const Poset& p);

// One maximum-length chain, bottom to top; ties broken toward the
// lexicographically smallest index sequence.
std::vector<int> max_chain(const Poset& p);

CanonicalKey canonical_form(const Poset& p, const Caps& caps = default_caps());
bool is_isomorphic(const Poset& a, const Poset& b, const Caps& caps = default_caps());

// Orders ideal masks by (popcount, lexicographic ascending index sequence).
bool ideal_mask_less(std::uint64_t a, std::uint64_t b);

}  // namespace hibi
