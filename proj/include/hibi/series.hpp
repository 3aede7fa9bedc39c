#pragma once

#include <cstdint>
#include <vector>

#include "hibi/caps.hpp"
#include "hibi/checked_arith.hpp"
#include "hibi/poset.hpp"

namespace hibi {

// Brute-force verdict record for one poset: Hilbert function values, the
// numerator Q(t) of the Hilbert series Q(t)/(1-t)^d, and the minimal degree of
// the canonical module, all computed from the monomial bases directly (no use
// of the closed formulas).
struct HilbertSummary {
    std::vector<std::int64_t> hf;        // HF(0..|P|+3)
    int d = 0;                           // |P| + 1
    std::vector<std::int64_t> h_coeffs;  // Q coefficients, indices 0..|P|
    int q_degree = 0;
    int a_invariant_oracle = 0;          // q_degree - d
    int reg_oracle = 0;                  // q_degree + 1, meaningful when the ideal is nonzero
    int canonical_min_degree = 0;        // min v(BOTTOM) over strict order-reversing maps
    bool symmetric = false;              // h-vector palindromic
};

// Number of weak order-reversing maps P -> {0..n} (equivalently maps on the
// bounded extension with v(BOTTOM) = n, v(TOP) = 0), counted exactly by
// dynamic programming over a linear extension.
int128 hilbert_function(const Poset& p, int n, const Caps& caps = default_caps());

// Convolves HF with (1-t)^d out to degree |P|+3, checks that everything past
// degree |P| vanishes (StabilizationFailure otherwise), and fills the summary.
HilbertSummary h_polynomial(const Poset& p, const Caps& caps = default_caps());

// Minimum of v(BOTTOM) over strictly order-reversing maps on the bounded
// extension, by exhaustive search with values bounded by rank+2. Equals
// rank(P) + 2; the depth function is a witness, the search proves minimality.
int canonical_min_degree(const Poset& p, const Caps& caps = default_caps());

// Degree of the exact interpolating polynomial through HF(0..|P|+2), plus one.
// Equals the Krull dimension |P| + 1.
int dim_oracle(const Poset& p, const Caps& caps = default_caps());

// h-vector palindromicity, the Gorenstein criterion for these rings.
bool gorenstein_oracle(const Poset& p, const Caps& caps = default_caps());

}  // namespace hibi
