#pragma once

#include "rsat/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsat {

// Built-in pattern library, accepted anywhere a pattern file is expected.
// Names (case-insensitive): k2..k6, p2..p6 (paths on that many vertices),
// c3..c8 (cycles), paw, diamond, book2 (two triangles on a common edge,
// spine = edge 0-1), wheel4 (hub 0 plus a 4-cycle).
std::optional<PatternGraph> named_pattern(std::string_view name);
std::vector<std::string> named_pattern_names();

} // namespace rsat
