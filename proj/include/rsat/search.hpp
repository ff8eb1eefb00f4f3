#pragma once

#include "rsat/graph.hpp"

#include <optional>
#include <vector>

namespace rsat {

// Extra requirements on the embeddings being searched for. required_edge, if
// present, must be an edge of the host graph and the image of the embedding
// must use it; forbidden_colour, if present, may not appear on any image edge.
struct SearchConstraint {
    std::optional<VertexPair> required_edge;
    std::optional<Colour> forbidden_colour;
};

// Linear-time validity check, independent of how the embedding was found.
bool is_valid_rainbow_embedding(const ColouredGraph& g, const PatternGraph& h,
    const Embedding& e, const SearchConstraint& c = {});

// Exhaustive search for an embedding of h into g whose image edges carry
// pairwise-distinct colours. Returns the first embedding in a fixed
// deterministic order, or nothing iff none exists. Complete patterns are
// routed through the clique engine below.
std::optional<Embedding> find_rainbow_embedding(const ColouredGraph& g, const PatternGraph& h,
    const SearchConstraint& c = {});

struct MaxRainbowClique {
    int size = 0;
    Embedding witness; // clique vertices ascending
};

// Largest q such that g has a q-vertex clique with pairwise-distinct edge
// colours, plus a witness attaining it. Branch-and-bound over a degeneracy
// order; deterministic.
MaxRainbowClique max_rainbow_clique(const ColouredGraph& g);

// Rainbow clique on exactly q vertices satisfying c, if one exists.
std::optional<Embedding> find_rainbow_clique(const ColouredGraph& g, int q,
    const SearchConstraint& c = {});
bool rainbow_clique_exists(const ColouredGraph& g, int q, const SearchConstraint& c = {});

namespace reference {

// Brute force over all injective maps in lexicographic order. Kept as the
// serial ground truth the fast engine is tested against; do not optimize.
std::optional<Embedding> find_rainbow_embedding_bruteforce(const ColouredGraph& g,
    const PatternGraph& h, const SearchConstraint& c = {});

} // namespace reference

} // namespace rsat
