#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hibi/caps.hpp"
#include "hibi/census.hpp"
#include "hibi/errors.hpp"
#include "hibi/invariants.hpp"
#include "hibi/io.hpp"
#include "hibi/lattice.hpp"
#include "hibi/poset.hpp"
#include "hibi/series.hpp"

namespace {

// Exit codes: 0 ok, 1 bad input, 2 size cap exceeded, 3 oracle/formula
// mismatch, 4 internal inconsistency.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCaps = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInternal = 4;

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream os(path);
        if (!os) throw hibi::ParseError("cannot open output file '" + path + "'");
        os << text;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw hibi::ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

hibi::Caps effective_caps(std::optional<int> cap_ideals, std::optional<int> cap_oracle) {
    hibi::Caps caps;
    if (const char* env = std::getenv("HIBI_CAPS")) caps = hibi::parse_caps(env, caps);
    if (cap_ideals) caps.ideal_elements = *cap_ideals;
    if (cap_oracle) caps.oracle_elements = *cap_oracle;
    return caps;
}

std::string report_text(const hibi::InvariantReport& r) {
    std::ostringstream os;
    os << "|P| = " << r.p_size << ", rank P = " << r.rank_p << ", |L| = " << r.lattice_size
       << "\n";
    os << "regularity " << r.regularity << (r.ideal_is_zero ? " (zero ideal)" : "") << "\n";
    os << "dimension " << r.krull_dim << ", projective dimension " << r.proj_dim
       << ", a-invariant " << r.a_invariant << "\n";
    os << "simple " << (r.flags.simple ? "yes" : "no") << ", pure "
       << (r.flags.pure ? "yes" : "no") << ", linear resolution "
       << (r.flags.linear_resolution ? "yes" : "no") << ", Gorenstein "
       << (r.flags.gorenstein ? "yes" : "no") << ", extremal Gorenstein "
       << (r.flags.extremal_gorenstein ? "yes" : "no") << "\n";
    return os.str();
}

// A document may declare its order to be a lattice; analyses then run on the
// poset of join-irreducibles, which determines the lattice completely.
hibi::Poset document_poset(const hibi::PosetDocument& doc, const hibi::Caps& caps) {
    if (!doc.as_lattice) return doc.poset;
    auto lattice = hibi::Lattice::from_order(doc.poset);
    if (!hibi::is_distributive(lattice, caps))
        throw hibi::NotDistributive("input lattice is not distributive");
    return hibi::join_irreducibles(lattice);
}

int cmd_analyze(const std::string& input, const Output& out, const std::string& format,
                const hibi::Caps& caps) {
    auto doc = hibi::parse_poset_document(slurp(input));
    const hibi::Poset p = document_poset(doc, caps);
    auto report = hibi::analyze(p, caps);
    auto lattice = hibi::ideal_lattice(p, caps);
    auto pres = hibi::hibi_generators(lattice, caps);
    std::optional<int> two_chain;
    if (report.flags.simple) two_chain = hibi::two_chain_regularity(p);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["report"] = hibi::report_to_json(report);
        j["generators"] = pres.generators.size();
        if (two_chain)
            j["two_chain_regularity"] = *two_chain;
        else
            j["two_chain_regularity"] = nullptr;
        out.write(j.dump() + "\n");
    } else {
        std::ostringstream os;
        os << report_text(report);
        os << "generators " << pres.generators.size() << "\n";
        if (two_chain) os << "two-chain regularity " << *two_chain << "\n";
        out.write(os.str());
    }
    return kExitOk;
}

int cmd_oracle(const std::string& input, const Output& out, const std::string& format,
               const hibi::Caps& caps) {
    auto doc = hibi::parse_poset_document(slurp(input));
    const hibi::Poset p = document_poset(doc, caps);
    auto summary = hibi::h_polynomial(p, caps);
    auto [reg_formula, zero] = hibi::regularity(p);

    std::optional<bool> match;
    if (!zero) match = (summary.reg_oracle == reg_formula);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["summary"] = hibi::summary_to_json(summary);
        j["reg_formula"] = reg_formula;
        j["ideal_is_zero"] = zero;
        if (match)
            j["verdict"] = *match ? "MATCH" : "MISMATCH";
        else
            j["verdict"] = nullptr;
        out.write(j.dump() + "\n");
    } else {
        std::ostringstream os;
        os << "HF:";
        for (auto v : summary.hf) os << " " << v;
        os << "\nQ coefficients:";
        for (auto v : summary.h_coeffs) os << " " << v;
        os << "\ndeg Q " << summary.q_degree << ", a-invariant " << summary.a_invariant_oracle
           << ", canonical min degree " << summary.canonical_min_degree << ", symmetric "
           << (summary.symmetric ? "yes" : "no") << "\n";
        if (zero)
            os << "zero ideal (chain); no regularity verdict\n";
        else
            os << "reg oracle " << summary.reg_oracle << " vs formula " << reg_formula << ": "
               << (*match ? "MATCH" : "MISMATCH") << "\n";
        out.write(os.str());
    }
    return (match && !*match) ? kExitMismatch : kExitOk;
}

int cmd_census(const hibi::CensusQuery& query, const Output& out, const std::string& dot_dir,
               const hibi::Caps& caps) {
    auto rows = hibi::run_census(query, caps);
    std::ostringstream os;
    int index = 0;
    for (const auto& [poset, report] : rows) {
        nlohmann::ordered_json j;
        j["poset"] = nlohmann::ordered_json::parse(hibi::poset_to_json(poset));
        j["report"] = hibi::report_to_json(report);
        os << j.dump() << "\n";
        if (!dot_dir.empty()) {
            std::filesystem::create_directories(dot_dir);
            std::string name = "poset_" + std::to_string(index);
            std::ofstream dot(std::filesystem::path(dot_dir) / (name + ".dot"));
            dot << hibi::poset_to_dot(poset, name);
        }
        ++index;
    }
    out.write(os.str());
    return kExitOk;
}

int cmd_dot(const std::string& input, const Output& out, const hibi::Caps& caps) {
    auto doc = hibi::parse_poset_document(slurp(input));
    if (doc.as_lattice) {
        auto lattice = hibi::Lattice::from_order(doc.poset);
        out.write(hibi::lattice_to_dot(lattice));
    } else {
        out.write(hibi::poset_to_dot(doc.poset));
    }
    (void)caps;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of the toric rings of finite distributive lattices"};
    app.require_subcommand(1);

    std::string input, output, format = "json", dot_dir;
    std::optional<int> cap_ideals, cap_oracle;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("--input,-i", input, "poset JSON file")->required();
        cmd->add_option("--output,-o", output, "write output here instead of stdout");
        cmd->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--cap-ideals", cap_ideals, "max poset size for down-set enumeration");
        cmd->add_option("--cap-oracle", cap_oracle, "max poset size for the series oracle");
    };

    auto* analyze = app.add_subcommand("analyze", "closed-formula invariant report");
    add_common(analyze, true);

    auto* oracle = app.add_subcommand("oracle", "Hilbert series brute force + verdict");
    add_common(oracle, true);

    auto* census = app.add_subcommand("census", "enumerate poset classes and filter");
    add_common(census, false);
    hibi::CensusQuery query;
    bool f_simple = false, f_pure = false, f_gorenstein = false, f_extremal = false;
    std::optional<int> f_k, f_reg;
    census->add_option("--nmin", query.n_min, "smallest poset size");
    census->add_option("--nmax", query.n_max, "largest poset size");
    census->add_option("--k", f_k, "require |P| - rank P = k");
    census->add_option("--reg", f_reg, "require regularity = value");
    census->add_flag("--simple", f_simple, "only simple posets");
    census->add_flag("--pure", f_pure, "only pure posets");
    census->add_flag("--gorenstein", f_gorenstein, "only Gorenstein");
    census->add_flag("--extremal", f_extremal, "only extremal Gorenstein");
    census->add_option("--dot-dir", dot_dir, "also write one DOT file per hit");

    auto* dot = app.add_subcommand("dot", "Hasse diagram as GraphViz DOT");
    add_common(dot, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        hibi::Caps caps = effective_caps(cap_ideals, cap_oracle);
        Output out{output};
        if (analyze->parsed()) return cmd_analyze(input, out, format, caps);
        if (oracle->parsed()) return cmd_oracle(input, out, format, caps);
        if (census->parsed()) {
            if (f_k) query.k_value = *f_k;
            if (f_reg) query.reg = *f_reg;
            if (f_simple) query.simple = true;
            if (f_pure) query.pure = true;
            if (f_gorenstein) query.gorenstein = true;
            if (f_extremal) query.extremal_gorenstein = true;
            return cmd_census(query, out, dot_dir, caps);
        }
        if (dot->parsed()) return cmd_dot(input, out, caps);
        return kExitInput;
    } catch (const hibi::SizeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCaps;
    } catch (const hibi::InternalInconsistency& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const hibi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
