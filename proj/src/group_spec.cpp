#include "regset/group_spec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace regset {

Group parse_group_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InputError("group spec needs '<kind>:<params>', got '" + spec + "'");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "abelian") {
        std::vector<int> factors;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                factors.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw InputError("bad abelian factor '" + item + "'");
            }
        }
        return Group::abelian(factors);
    }
    if (kind == "dihedral") {
        int n;
        try {
            n = std::stoi(rest);
        } catch (const std::exception&) {
            throw InputError("bad dihedral parameter '" + rest + "'");
        }
        return Group::dihedral(n);
    }
    if (kind == "table") {
        std::ifstream in(rest);
        if (!in) throw InputError("cannot open table file '" + rest + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw InputError("bad table JSON: " + std::string(e.what()));
        }
        if (!j.contains("order") || !j.contains("table"))
            throw InputError("table JSON must contain 'order' and 'table'");
        return Group::from_table(j["order"].get<int>(),
                                 j["table"].get<std::vector<int>>());
    }
    throw InputError("unknown group kind '" + kind + "'");
}

std::string group_spec_string(const Group& g) {
    switch (g.kind()) {
        case GroupKind::Abelian: {
            std::string s = "abelian:";
            const auto& f = g.factor_orders();
            for (size_t i = 0; i < f.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(f[i]);
            }
            return s;
        }
        case GroupKind::Dihedral:
            return "dihedral:" + std::to_string(g.dihedral_n());
        case GroupKind::Table:
            return "table:order=" + std::to_string(g.order());
    }
    return "?";
}

}  // namespace regset
