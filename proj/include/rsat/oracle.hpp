#pragma once

#include "rsat/graph.hpp"
#include "rsat/saturation.hpp"

#include <optional>

namespace rsat {

struct OracleStats {
    long long graphs_examined = 0;     // canonical labelled graphs
    long long colourings_examined = 0; // edge partitions tested
};

struct OracleResult {
    int n = 0;
    Palette palette;
    std::optional<int> min_edges;
    std::optional<ColouredGraph> witness;
    OracleStats stats;
};

struct OracleOptions {
    std::optional<int> edge_budget; // stop after this many edges without a witness
    bool allow_large = false;       // lift the n <= 6 guard
    bool parallel = true;
};

// Exhaustive minimum: enumerates edge counts ascending; per count, labelled
// graphs deduplicated by their permutation-minimal edge bitmask; per graph,
// colourings as set partitions of the edge set (colour names never matter:
// under the unbounded palette any renaming preserves saturation, and under
// bounded(t) partitions are capped at t blocks). The first saturated
// candidate in (edge count, canonical mask, partition) order is optimal.
// Every witness is re-verified with saturation_report before returning.
OracleResult exact_rsat(int n, const PatternGraph& h, const Palette& p, const OracleOptions& opts = {});

struct UpperBoundResult {
    int edges_after_absorb = 0;
    bool saturated = false;
};

// Certifies an upper bound from a rainbow-free construction output: absorb,
// then re-check saturation; the resulting edge count bounds the minimum.
UpperBoundResult verify_upper_bound(const ColouredGraph& g, const PatternGraph& h, const Palette& p);

} // namespace rsat
