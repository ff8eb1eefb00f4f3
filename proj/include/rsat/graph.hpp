#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rsat {

// Colours are dense non-negative integers so colour-usage sets can be bitmasks.
using Colour = int;
using VertexPair = std::pair<int, int>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline VertexPair ordered(int u, int v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }

// Uncoloured simple graph on vertices 0..n-1. Edges are stored normalized
// (u < v), sorted and deduplicated; immutable after construction.
class PatternGraph {
public:
    PatternGraph() = default;
    PatternGraph(int n, std::vector<VertexPair> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool is_complete() const;
    bool is_connected() const;
    int min_degree() const;
    // Vertex sets of connected components, each sorted, ordered by lowest vertex.
    std::vector<std::vector<int>> components() const;
    // Induced subgraph on the given vertices, relabelled 0..k-1 in ascending
    // order of the original indices.
    PatternGraph induced(const std::vector<int>& vertices) const;

    friend bool operator==(const PatternGraph& a, const PatternGraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<int>> adj_;
};

struct ColouredEdge {
    int u = 0, v = 0; // u < v
    Colour colour = 0;
    friend auto operator<=>(const ColouredEdge&, const ColouredEdge&) = default;
};

// Simple graph with a total colour assignment on edges. Immutable after
// construction; adjacency lists carry the edge colour alongside the neighbour.
class ColouredGraph {
public:
    ColouredGraph() = default;
    ColouredGraph(int n, std::vector<ColouredEdge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<ColouredEdge>& edges() const { return edges_; }
    const std::vector<std::pair<int, Colour>>& adjacency(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const { return colour_of(u, v).has_value(); }
    std::optional<Colour> colour_of(int u, int v) const;

    // Copy with one extra edge; throws if (u, v) is already present.
    ColouredGraph with_edge(int u, int v, Colour c) const;
    std::vector<VertexPair> non_edges() const; // lexicographic (u, v)
    ColouredGraph induced(const std::vector<int>& vertices) const;

    friend bool operator==(const ColouredGraph& a, const ColouredGraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<ColouredEdge> edges_; // sorted by (u, v)
    std::vector<std::vector<std::pair<int, Colour>>> adj_;
};

// Distinct colours appearing on at least one edge, ascending.
std::vector<Colour> used_colours(const ColouredGraph& g);
// Smallest non-negative colour not used by any edge.
Colour fresh_colour(const ColouredGraph& g);

// Injective vertex map witnessing a (rainbow) copy: map[p] is the image of
// pattern vertex p.
struct Embedding {
    std::vector<int> map;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct VertexLabel {
    std::string role;
    int copy = -1;
    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// Construction output: a coloured graph plus the vertex roles and (optionally)
// per-edge labels the builder assigned. Each builder documents its own label
// contract.
struct LabelledColouredGraph {
    ColouredGraph graph;
    std::vector<VertexLabel> vertex_labels;                     // size n or empty
    std::vector<std::pair<VertexPair, VertexPair>> edge_labels; // G edge -> label, sorted

    std::optional<VertexPair> label_of(int u, int v) const;
    friend bool operator==(const LabelledColouredGraph&, const LabelledColouredGraph&) = default;
};

} // namespace rsat
