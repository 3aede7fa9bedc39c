#include "hibi/io.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hibi {

using nlohmann::json;
using nlohmann::ordered_json;

PosetDocument parse_poset_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
        throw ParseError("expected an object with an \"elements\" array");

    std::vector<std::string> names;
    for (const auto& e : doc["elements"]) {
        if (!e.is_string()) throw ParseError("element names must be strings");
        names.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> relations;
    if (doc.contains("relations")) {
        if (!doc["relations"].is_array()) throw ParseError("\"relations\" must be an array");
        for (const auto& r : doc["relations"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                throw ParseError("each relation must be a pair of element names");
            relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
        }
    }
    PosetDocument out;
    out.poset = Poset::from_relations(names, relations);
    if (doc.contains("as_lattice")) {
        if (!doc["as_lattice"].is_boolean()) throw ParseError("\"as_lattice\" must be a boolean");
        out.as_lattice = doc["as_lattice"].get<bool>();
    }
    return out;
}

std::string poset_to_json(const Poset& p) {
    ordered_json doc;
    doc["elements"] = p.labels();
    auto rel = ordered_json::array();
    for (auto [a, b] : p.covers()) rel.push_back({p.label(a), p.label(b)});
    doc["relations"] = rel;
    return doc.dump();
}

ordered_json report_to_json(const InvariantReport& r) {
    ordered_json doc;
    doc["p_size"] = r.p_size;
    doc["rank_p"] = r.rank_p;
    doc["lattice_size"] = r.lattice_size;
    doc["regularity"] = r.regularity;
    doc["ideal_is_zero"] = r.ideal_is_zero;
    doc["krull_dim"] = r.krull_dim;
    doc["proj_dim"] = r.proj_dim;
    doc["a_invariant"] = r.a_invariant;
    ordered_json flags;
    flags["simple"] = r.flags.simple;
    flags["pure"] = r.flags.pure;
    flags["linear_resolution"] = r.flags.linear_resolution;
    flags["gorenstein"] = r.flags.gorenstein;
    flags["extremal_gorenstein"] = r.flags.extremal_gorenstein;
    doc["flags"] = flags;
    return doc;
}

ordered_json summary_to_json(const HilbertSummary& s) {
    ordered_json doc;
    doc["hf"] = s.hf;
    doc["h"] = s.h_coeffs;
    doc["deg_q"] = s.q_degree;
    doc["a"] = s.a_invariant_oracle;
    doc["reg_oracle"] = s.reg_oracle;
    doc["canonical_min_degree"] = s.canonical_min_degree;
    doc["symmetric"] = s.symmetric;
    return doc;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Shared body: nodes, cover edges bottom-up, same-rank groups by height.
template <typename LabelFn>
std::string hasse_dot(const std::string& name, int n, LabelFn label,
                      const std::vector<std::pair<int, int>>& covers,
                      const std::vector<int>& height) {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(name) << "\" {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle];\n";
    for (int i = 0; i < n; ++i)
        os << "  n" << i << " [label=\"" << dot_escape(label(i)) << "\"];\n";
    for (auto [a, b] : covers) os << "  n" << a << " -> n" << b << ";\n";
    int max_h = height.empty() ? 0 : *std::max_element(height.begin(), height.end());
    for (int h = 0; h <= max_h; ++h) {
        bool any = false;
        for (int i = 0; i < n; ++i)
            if (height[i] == h) any = true;
        if (!any) continue;
        os << "  { rank=same;";
        for (int i = 0; i < n; ++i)
            if (height[i] == h) os << " n" << i << ";";
        os << " }\n";
    }
    os << "}\n";
    return os.str();
}

std::vector<int> heights_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    std::vector<int> h(n, 0);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : covers) indeg[b]++;
    std::vector<int> queue;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int a = queue[qi];
        for (auto [x, y] : covers)
            if (x == a) {
                h[y] = std::max(h[y], h[a] + 1);
                if (--indeg[y] == 0) queue.push_back(y);
            }
    }
    return h;
}

}  // namespace

std::string poset_to_dot(const Poset& p, const std::string& name) {
    auto heights = heights_from_covers(p.size(), p.covers());
    return hasse_dot(name, p.size(), [&](int i) { return p.label(i); }, p.covers(), heights);
}

std::string lattice_to_dot(const Lattice& l, const std::string& name) {
    auto heights = heights_from_covers(l.size(), l.covers());
    return hasse_dot(name, l.size(), [&](int i) { return l.label(i); }, l.covers(), heights);
}

}  // namespace hibi
