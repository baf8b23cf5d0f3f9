#pragma once

#include <metaopt/core.hpp>
#include <metaopt/parser.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(METAOPT_FIXTURES) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline metaopt::Program fixture_program(const std::string& name) { return metaopt::parse_program(read_fixture(name)); }

/// "p,q" -> {p,q}
inline metaopt::Interpretation interp(const std::string& csv) {
    metaopt::Interpretation x;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            x.insert(metaopt::Atom(item));
        }
    }
    return x;
}

inline std::vector<metaopt::Interpretation> interps(std::initializer_list<const char*> items) {
    std::vector<metaopt::Interpretation> out;
    for (const char* s : items) {
        out.push_back(interp(s));
    }
    return out;
}

} // namespace testing
