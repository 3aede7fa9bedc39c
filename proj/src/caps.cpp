#include "hibi/caps.hpp"

#include <charconv>

#include "hibi/errors.hpp"

namespace hibi {

Caps parse_caps(const std::string& spec, Caps base) {
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        std::string entry = spec.substr(pos, comma - pos);
        pos = comma + 1;
        if (entry.empty()) continue;
        size_t eq = entry.find('=');
        if (eq == std::string::npos)
            throw ParseError("cap entry '" + entry + "' is not of the form key=value");
        std::string key = entry.substr(0, eq);
        std::string value = entry.substr(eq + 1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc{} || ptr != value.data() + value.size() || v <= 0)
            throw ParseError("cap value '" + value + "' is not a positive integer");
        if (key == "ideals")
            base.ideal_elements = v;
        else if (key == "lattice")
            base.lattice_elements = v;
        else if (key == "distributive")
            base.distributive_elements = v;
        else if (key == "iso")
            base.iso_elements = v;
        else if (key == "enum")
            base.enum_elements = v;
        else if (key == "oracle")
            base.oracle_elements = v;
        else
            throw ParseError("unknown cap '" + key + "'");
    }
    return base;
}

}  // namespace hibi
