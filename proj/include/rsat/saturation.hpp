#pragma once

#include "rsat/graph.hpp"
#include "rsat/search.hpp"

#include <optional>
#include <vector>

namespace rsat {

// Colour palette the saturation notions quantify over: either exactly the
// colours 0..t-1, or every non-negative integer.
struct Palette {
    std::optional<int> limit; // nullopt = unbounded

    static Palette unbounded() { return {}; }
    static Palette bounded(int t)
    {
        if (t < 1)
            throw Error("bounded palette needs t >= 1");
        return {t};
    }
    bool is_bounded() const { return limit.has_value(); }
};

// Bad colours of one non-edge, canonicalized. Under a bounded palette every
// bad colour is listed explicitly and fresh_bad stays false. Under the
// unbounded palette, colours holds the bad ones among used_colours(G) and
// fresh_bad covers all colours outside it at once: colours not appearing in G
// are interchangeable, so one representative decides them all.
struct BadColourSet {
    std::vector<Colour> colours; // ascending
    bool fresh_bad = false;

    bool empty() const { return colours.empty() && !fresh_bad; }
    friend bool operator==(const BadColourSet&, const BadColourSet&) = default;
};

// Adding the non-edge e in colour c is "bad" when it creates no rainbow copy
// of h that uses e. Throws if e is an existing edge, or if a bounded palette
// is smaller than some colour already used by g.
BadColourSet bad_colours(const ColouredGraph& g, const PatternGraph& h, VertexPair e, const Palette& p);

// First bad colour of e in canonical order (used colours ascending, then the
// fresh representative), or nothing when e is good in every colour.
std::optional<Colour> is_bad(const ColouredGraph& g, const PatternGraph& h, VertexPair e, const Palette& p);

struct BadNonEdge {
    VertexPair edge;
    BadColourSet bad;
    friend bool operator==(const BadNonEdge&, const BadNonEdge&) = default;
};

struct SaturationReport {
    bool has_rainbow = false;
    std::optional<Embedding> rainbow_witness;
    std::vector<BadNonEdge> bad_nonedges; // only non-edges with a bad colour, lexicographic
    bool is_saturated = false;            // == !has_rainbow && bad_nonedges.empty()
    bool palette_too_small = false;       // bounded t < |E(h)|: no rainbow copy can ever exist
};

struct ReportOptions {
    bool parallel = true; // scan non-edges with OpenMP; serial path kept for testing
};

SaturationReport saturation_report(const ColouredGraph& g, const PatternGraph& h, const Palette& p,
    const ReportOptions& opts = {});

struct AbsorbResult {
    ColouredGraph graph;
    std::vector<std::pair<VertexPair, Colour>> added; // in addition order
};

// Greedy completion: walk the initially-bad non-edges in lexicographic order
// and add each one that is still bad (against the current graph) in its first
// bad colour. The input must contain no rainbow copy of h. The result is
// h-rainbow saturated under p and gains at most one edge per initially-bad
// non-edge. Inherently sequential.
AbsorbResult absorb(const ColouredGraph& g, const PatternGraph& h, const Palette& p);

} // namespace rsat
