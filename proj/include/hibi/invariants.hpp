#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hibi/caps.hpp"
#include "hibi/lattice.hpp"
#include "hibi/poset.hpp"

namespace hibi {

// One defining binomial x_a x_b - x_{a^b} x_{avb} of the toric ideal, stored as
// an unordered pair of monomials (index pairs); no field coefficients needed.
struct BinomialGenerator {
    std::uint16_t a, b;        // the incomparable pair, a < b as indices
    std::uint16_t meet, join;  // their meet and join
};

// Quadratic presentation of the toric ring of a distributive lattice: one
// variable per lattice element, one binomial per incomparable pair, and the
// torus weight of each variable (exponent vector of s * prod_{p in a} t_p).
struct HibiPresentation {
    int variable_count = 0;
    std::vector<BinomialGenerator> generators;
    // weight[i] has size 1 + |P|: slot 0 is the exponent of s (always 1),
    // slot 1+k the exponent of t_{p_k}.
    std::vector<std::vector<int>> torus_weights;
};

struct InvariantFlags {
    bool simple = false;
    bool pure = false;
    bool linear_resolution = false;
    bool gorenstein = false;
    bool extremal_gorenstein = false;
};

// Everything the closed formulas say about one poset / its ideal lattice.
struct InvariantReport {
    int p_size = 0;
    int rank_p = 0;
    int lattice_size = 0;
    int regularity = 0;        // |P| - rank P
    bool ideal_is_zero = false;  // P is a chain; the defining ideal vanishes
    int krull_dim = 0;         // |P| + 1
    int proj_dim = 0;          // |L| - |P| - 2 (negative only when ideal_is_zero)
    int a_invariant = 0;       // -(rank P + 2)
    InvariantFlags flags;
};

// Builds the presentation from a distributive lattice and verifies the torus
// weight balance of every generator before returning.
HibiPresentation hibi_generators(const Lattice& l, const Caps& caps = default_caps());

// (|P| - rank P, ideal_is_zero). For chains the ideal is zero and the formula
// value 1 is still reported; callers must branch on the flag.
std::pair<int, bool> regularity(const Poset& p);

int a_invariant(const Poset& p);
int krull_dim(const Poset& p);

// |L| - |P| - 2. Requires l = ideal_lattice(p); raises MismatchedPair
// otherwise, and InternalInconsistency if the value would be negative.
int proj_dim(const Poset& p, const Lattice& l);

// Whether P is the disjoint union of one chain and one isolated element.
// Stated for simple posets only (NotSimple otherwise); equivalent to
// regularity == 2 there.
bool has_linear_resolution(const Poset& p);

bool is_gorenstein(const Poset& p);
bool is_extremal_gorenstein(const Poset& p);

// Picks the maximum chain C1 = max_chain(p); if the complement is a chain C2,
// returns |C2| + 1 (equal to |P| - rank P), else nullopt. Simple posets only.
std::optional<int> two_chain_regularity(const Poset& p);

// Full report; computes the ideal lattice, so the usual caps apply.
InvariantReport analyze(const Poset& p, const Caps& caps = default_caps());

}  // namespace hibi
