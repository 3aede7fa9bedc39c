#pragma once

#include <string>

namespace hibi {

// Size caps for the potentially exponential operations. These are configuration,
// not hard constants; the defaults keep every stock workload under a minute.
struct Caps {
    int ideal_elements = 20;        // max |P| for down-set enumeration
    int lattice_elements = 4096;    // max |I(P)| when building the ideal lattice
    int distributive_elements = 512;  // max |L| for the cubic distributivity check
    int iso_elements = 10;          // max size for canonical forms / isomorphism search
    int enum_elements = 8;          // max n for unlabeled poset enumeration
    int oracle_elements = 8;        // max |P| for the Hilbert-series oracle
};

inline const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

// Parses overrides of the form "ideals=22,oracle=9,lattice=8192,distributive=512,
// iso=10,enum=8" on top of `base`. Unknown keys and malformed entries raise ParseError.
Caps parse_caps(const std::string& spec, Caps base = Caps{});

}  // namespace hibi
