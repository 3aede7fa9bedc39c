#pragma once

#include <string>

#include "hibi/invariants.hpp"
#include "hibi/lattice.hpp"
#include "hibi/poset.hpp"
#include "hibi/series.hpp"

#include <nlohmann/json_fwd.hpp>

namespace hibi {

// The one input format: {"elements": [...], "relations": [["a","c"], ...]},
// optionally {"as_lattice": true} to read the order as a lattice downstream.
struct PosetDocument {
    Poset poset;
    bool as_lattice = false;
};

PosetDocument parse_poset_document(const std::string& text);
std::string poset_to_json(const Poset& p);

// Serializations with stable key order (declaration order of the structs).
nlohmann::ordered_json report_to_json(const InvariantReport& r);
nlohmann::ordered_json summary_to_json(const HilbertSummary& s);

// Hasse diagram as GraphViz DOT: one node per element, one edge per cover
// (lower -> upper), elements of equal height grouped into the same rank.
std::string poset_to_dot(const Poset& p, const std::string& name = "poset");
std::string lattice_to_dot(const Lattice& l, const std::string& name = "lattice");

}  // namespace hibi
