#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hibi/caps.hpp"
#include "hibi/invariants.hpp"
#include "hibi/lattice.hpp"
#include "hibi/poset.hpp"

namespace hibi {

// Conjunctive filter over isomorphism classes of posets in a size range.
struct CensusQuery {
    int n_min = 1;
    int n_max = 8;
    std::optional<bool> simple;
    std::optional<bool> pure;
    std::optional<bool> linear_resolution;
    std::optional<bool> gorenstein;
    std::optional<bool> extremal_gorenstein;
    std::optional<int> reg;      // |P| - rank P, the regularity formula value
    std::optional<int> k_value;  // alias for the same quantity; both must hold if both set
};

// All isomorphism classes of n-element posets, exactly once each, in
// canonical-key order. Generated by extending (n-1)-classes with a new maximal
// element over every down-set, deduplicated by canonical form.
std::vector<Poset> enumerate_posets(int n, const Caps& caps = default_caps());

// Filtered census; each hit carries its full invariant report. Deterministic
// order: by (n, canonical key).
std::vector<std::pair<Poset, InvariantReport>> run_census(const CensusQuery& q,
                                                          const Caps& caps = default_caps());

// Classifies a simple poset with |P| - rank P = 3 into one of the six
// regularity-3 family templates ("F1".."F6", loaded from the bundled resource
// data); degenerate overlaps resolve to the lowest tag. nullopt means no
// template matches. Raises PreconditionViolated unless simple with k = 3.
std::optional<std::string> reg3_family(const Poset& p, const Caps& caps = default_caps());

// All instances of one family template with the given element count, as
// canonical keys. Exposed for the exhaustiveness tests.
std::vector<CanonicalKey> reg3_family_instances(const std::string& tag, int n,
                                                const Caps& caps = default_caps());

// The ideal lattices of the census {simple, pure, |P|-rank = 3, n <= 8},
// sorted by lattice size: the extremal Gorenstein classification.
std::vector<Lattice> extremal_gorenstein_lattices(const Caps& caps = default_caps());

}  // namespace hibi
