#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kmetric/constructions.hpp"

namespace kmetric {

// Graph expression mini-language:
//
//   expr     := family | named | composite | "@" path
//   family   := ("P"|"C"|"K"|"S"|"F"|"W") integer      P4, C6, K5, S4, F10, W9
//   named    := "petersen"
//   composite:= "corona" "(" expr ";" expr {"," expr} ")"
//             | "join" "(" expr ";" expr ")"
//             | "comp" "(" expr ")"
//   path     := characters up to the next ',', ';', ')' or whitespace
//
// S4 is the star on 4 vertices, F10/W9 the fan/wheel with that many rim
// vertices. corona() requires exactly one attachment per base vertex.
// Whitespace between tokens is ignored. Errors throw ParseError.
Graph parse_graph_expr(std::string_view expr);

// Splits "H1,H2,H3" at top-level commas and parses each element.
std::vector<Graph> parse_graph_list(std::string_view list);

}  // namespace kmetric
