#pragma once

#include "rsat/graph.hpp"

#include <string>

namespace rsat {

// JSON formats:
//   pattern graph:   {"n": <int>, "edges": [[u, v], ...]}
//   coloured graph:  {"n": <int>, "edges": [[u, v, colour], ...],
//                     "labels": {...}}            (labels optional)
// with 0 <= u < v < n and colour >= 0. The labels block carries
// "vertices": [{"role": str, "copy": int}, ...] and
// "edges": [[u, v, a, b], ...] mapping the G edge (u,v) to its label (a,b).
// Serialization is deterministic: edges ascend lexicographically.

PatternGraph parse_pattern(const std::string& text);
ColouredGraph parse_coloured(const std::string& text);
LabelledColouredGraph parse_labelled(const std::string& text);

std::string serialize(const PatternGraph& g);
std::string serialize(const ColouredGraph& g);
std::string serialize(const LabelledColouredGraph& g);

// DOT export for human inspection (not bit-exact): one line per edge with the
// colour index as the label, vertex roles shown when labels are present.
std::string to_dot(const LabelledColouredGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace rsat
