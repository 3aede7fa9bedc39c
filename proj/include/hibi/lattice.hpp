#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hibi/caps.hpp"
#include "hibi/poset.hpp"

namespace hibi {

// Finite lattice: order relation plus explicit meet/join tables. When built as
// the lattice of order ideals of a poset, each element remembers its ideal mask
// and the source poset, and meet/join are intersection/union by construction.
class Lattice {
  public:
    // Treats an arbitrary finite order as a lattice: meet/join tables are the
    // unique glb/lub computed from the order. Raises NotLattice if a pair has
    // none (or no unique one).
    static Lattice from_order(const Poset& order);

    // Low-level constructor for pre-computed tables; validates shape only, so
    // a corrupted table surfaces later as InternalInconsistency.
    static Lattice from_tables(std::vector<std::string> labels,
                               std::vector<std::uint64_t> up_masks,
                               std::vector<std::uint16_t> meet,
                               std::vector<std::uint16_t> join);

    int size() const { return m_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool leq(int a, int b) const;
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * m_ + b]; }
    int join(int a, int b) const { return join_[static_cast<size_t>(a) * m_ + b]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    // Hasse diagram of the order, sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    // Present iff the lattice was built by ideal_lattice.
    const std::optional<std::vector<std::uint64_t>>& ideal_map() const { return ideal_map_; }
    const std::optional<Poset>& source_poset() const { return source_; }

  private:
    friend Lattice ideal_lattice(const Poset&, const Caps&);

    int words() const;
    void set_leq(int a, int b);

    int m_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> up_;  // m rows of ceil(m/64) words each
    std::vector<std::uint16_t> meet_;
    std::vector<std::uint16_t> join_;
    int bottom_ = 0;
    int top_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::optional<std::vector<std::uint64_t>> ideal_map_;
    std::optional<Poset> source_;
};

// The distributive lattice I(P) of all down-sets of P, ordered by inclusion,
// with union/intersection as join/meet. Elements appear in the canonical
// down-set order of order_ideals.
Lattice ideal_lattice(const Poset& p, const Caps& caps = default_caps());

// The lattice order as a Poset (for canonical forms, DOT export, census
// comparisons); only possible within the poset size limit.
Poset lattice_order_poset(const Lattice& l);

// The induced subposet of join-irreducible elements. Computed two ways
// (definitional test over all pairs, and unique-lower-cover count) and
// cross-checked; disagreement raises InternalInconsistency.
Poset join_irreducibles(const Lattice& l);

bool is_distributive(const Lattice& l, const Caps& caps = default_caps());

// Whether L is isomorphic to the ideal lattice of its join-irreducibles,
// verified through the structure map a |-> { j join-irreducible : j <= a }.
// True for every distributive lattice.
bool birkhoff_roundtrip(const Lattice& l, const Caps& caps = default_caps());

}  // namespace hibi
