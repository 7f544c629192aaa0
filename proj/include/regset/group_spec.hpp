#pragma once

#include <string>

#include "regset/group.hpp"

namespace regset {

// Grammar: "abelian:2,4,3" | "dihedral:12" | "table:<path>" where the table
// file is a JSON object {"order": n, "table": [row-major indices]}.
Group parse_group_spec(const std::string& spec);

// Canonical spec string for a structured group ("abelian:2,4" etc.).
std::string group_spec_string(const Group& g);

}  // namespace regset
