#include "hibi/census.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "hibi/reg3_families_data.hpp"

namespace hibi {

namespace {

std::string element_name(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "e" + std::to_string(i);
}

}  // namespace

std::vector<Poset> enumerate_posets(int n, const Caps& caps) {
    if (n < 1 || n > caps.enum_elements)
        throw SizeCapExceeded("poset enumeration capped at " +
                              std::to_string(caps.enum_elements) + " elements, got " +
                              std::to_string(n));

    std::vector<Poset> classes{Poset::from_index_relations({element_name(0)}, {})};
    for (int k = 2; k <= n; ++k) {
        // Every k-poset arises from a (k-1)-poset by deleting a maximal
        // element, so extending with a new maximal element over every down-set
        // is complete; the canonical form deduplicates.
        std::map<CanonicalKey, Poset> next;
        for (const Poset& p : classes) {
            std::vector<std::string> labels = p.labels();
            labels.push_back(element_name(k - 1));
            for (std::uint64_t down : order_ideals(p, caps)) {
                std::vector<std::pair<int, int>> rel(p.covers());
                for (int i = 0; i < p.size(); ++i)
                    if ((down >> i) & 1u) rel.emplace_back(i, k - 1);
                Poset q = Poset::from_index_relations(labels, rel);
                next.emplace(canonical_form(q, caps), std::move(q));
            }
        }
        classes.clear();
        for (auto& [key, poset] : next) classes.push_back(std::move(poset));
    }
    return classes;
}

std::vector<std::pair<Poset, InvariantReport>> run_census(const CensusQuery& q, const Caps& caps) {
    if (q.n_max > caps.enum_elements)
        throw SizeCapExceeded("census range exceeds the enumeration cap of " +
                              std::to_string(caps.enum_elements));
    std::vector<std::pair<Poset, InvariantReport>> out;
    for (int n = std::max(1, q.n_min); n <= q.n_max; ++n) {
        for (const Poset& p : enumerate_posets(n, caps)) {
            int r = rank(p);
            int k = n - r;
            bool zero = (r == n - 1);
            if (q.reg && *q.reg != k) continue;
            if (q.k_value && *q.k_value != k) continue;
            if (q.simple && is_simple(p) != *q.simple) continue;
            if (q.pure && is_pure(p) != *q.pure) continue;
            if (q.linear_resolution && (!zero && k == 2) != *q.linear_resolution) continue;
            if (q.gorenstein && is_pure(p) != *q.gorenstein) continue;
            if (q.extremal_gorenstein && (is_pure(p) && k == 3) != *q.extremal_gorenstein)
                continue;
            out.emplace_back(p, analyze(p, caps));
        }
    }
    return out;
}

namespace {

struct FamilyTemplate {
    std::string tag;
    bool covering = false;  // q < q' when set, incomparable otherwise
    std::string q_attach;
    std::string qprime_attach;
    int min_attachments = 0;
};

const std::vector<FamilyTemplate>& family_templates() {
    static const std::vector<FamilyTemplate> templates = [] {
        auto doc = nlohmann::json::parse(detail::kReg3FamiliesJson);
        std::vector<FamilyTemplate> out;
        for (const auto& f : doc.at("families")) {
            FamilyTemplate t;
            t.tag = f.at("tag").get<std::string>();
            t.covering = f.at("pair").get<std::string>() == "covering";
            t.q_attach = f.at("q").get<std::string>();
            t.qprime_attach = f.at("qprime").get<std::string>();
            if (f.contains("min_attachments"))
                t.min_attachments = f.at("min_attachments").get<int>();
            out.push_back(std::move(t));
        }
        return out;
    }();
    return templates;
}

// (d, u) choices allowed by an attachment mode, relative to a c-chain:
// d > 0 ties chain[d-1] below the element, u > 0 ties it below chain[c-u].
std::vector<std::pair<int, int>> attach_choices(const std::string& mode, int c) {
    std::vector<std::pair<int, int>> out;
    if (mode == "none") {
        out.emplace_back(0, 0);
    } else if (mode == "up") {
        for (int u = 1; u <= c; ++u) out.emplace_back(0, u);
    } else if (mode == "down") {
        for (int d = 1; d <= c; ++d) out.emplace_back(d, 0);
    } else if (mode == "any") {
        for (int d = 0; d <= c; ++d)
            for (int u = 0; u <= c; ++u) out.emplace_back(d, u);
    } else {
        throw ParseError("unknown attachment mode '" + mode + "' in family templates");
    }
    return out;
}

}  // namespace

std::vector<CanonicalKey> reg3_family_instances(const std::string& tag, int n, const Caps& caps) {
    const FamilyTemplate* tmpl = nullptr;
    for (const auto& t : family_templates())
        if (t.tag == tag) tmpl = &t;
    if (!tmpl) throw PreconditionViolated("unknown family tag '" + tag + "'");

    std::vector<CanonicalKey> keys;
    const int c = n - 2;
    if (c < 1) return keys;
    const int q = c, qp = c + 1;

    std::vector<std::string> labels;
    for (int i = 0; i < c; ++i) labels.push_back("p" + std::to_string(i));
    labels.push_back("q");
    labels.push_back("q'");

    for (auto [dq, uq] : attach_choices(tmpl->q_attach, c)) {
        for (auto [dp, up] : attach_choices(tmpl->qprime_attach, c)) {
            int attachments = (dq > 0) + (uq > 0) + (dp > 0) + (up > 0);
            if (attachments < tmpl->min_attachments) continue;
            std::vector<std::pair<int, int>> rel;
            for (int i = 0; i + 1 < c; ++i) rel.emplace_back(i, i + 1);
            if (tmpl->covering) rel.emplace_back(q, qp);
            if (dq > 0) rel.emplace_back(dq - 1, q);
            if (uq > 0) rel.emplace_back(q, c - uq);
            if (dp > 0) rel.emplace_back(dp - 1, qp);
            if (up > 0) rel.emplace_back(qp, c - up);
            Poset p;
            try {
                p = Poset::from_index_relations(labels, rel);
            } catch (const CycleError&) {
                continue;  // attachment straddles the chain the wrong way round
            }
            if (rank(p) != c - 1 || !is_simple(p)) continue;
            keys.push_back(canonical_form(p, caps));
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

std::optional<std::string> reg3_family(const Poset& p, const Caps& caps) {
    if (p.empty()) throw EmptyPoset("family classification of the empty poset");
    if (!is_simple(p)) throw PreconditionViolated("family classification assumes a simple poset");
    if (p.size() - rank(p) != 3)
        throw PreconditionViolated("family classification assumes |P| - rank P = 3");

    CanonicalKey key = canonical_form(p, caps);
    for (const auto& t : family_templates()) {
        auto instances = reg3_family_instances(t.tag, p.size(), caps);
        if (std::binary_search(instances.begin(), instances.end(), key)) return t.tag;
    }
    return std::nullopt;
}

std::vector<Lattice> extremal_gorenstein_lattices(const Caps& caps) {
    CensusQuery q;
    q.n_min = 1;
    q.n_max = std::min(8, caps.enum_elements);
    q.simple = true;
    q.pure = true;
    q.k_value = 3;
    std::vector<Lattice> out;
    for (const auto& [poset, report] : run_census(q, caps)) out.push_back(ideal_lattice(poset, caps));
    std::stable_sort(out.begin(), out.end(),
                     [](const Lattice& a, const Lattice& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace hibi
