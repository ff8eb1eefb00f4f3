#pragma once

#include "rsat/graph.hpp"

#include <optional>
#include <vector>

namespace rsat {

// Everything derived from contracting the edge xy of a pattern h. In hprime
// the merged vertex x|y has index 0 and the remaining vertices of h keep
// their relative order (ascending original index -> 1, 2, ...).
struct ContractionData {
    PatternGraph h;
    int x = 0, y = 0;
    PatternGraph hprime;
    std::vector<int> hprime_index;        // h vertex -> hprime index; x and y both map to 0
    std::vector<int> hprime_to_h;         // hprime index -> h vertex (-1 for the merged vertex)
    std::vector<int> common;              // S: common neighbours of x and y, ascending (h ids)
    std::vector<VertexPair> t_edges;      // T: h edges between {x,y} and S
    std::vector<VertexPair> tprime_edges; // T': hprime edges from 0 to the images of S
    PatternGraph hpp;                     // hprime minus the T' edges
};

ContractionData contract(const PatternGraph& h, int x, int y);

// Duplicate-and-share construction. Vertices 0..m-1 form the shared
// independent set M (role "M"); copy c of the contracted pattern occupies the
// next block, with hprime vertex j at index m + c*(|V(h)|-2) + (j-1) and role
// "v<j>". Every edge is labelled by its hprime edge. Colours: hpp edge i (in
// lexicographic edge order) has base colour i, colour |E(hpp)| is "black" and
// replaces base colours inside the copy indexed by that edge, and every
// T'-labelled edge gets its own colour >= |E(hpp)|+1, allocated in
// (copy, label, M-vertex) order.
LabelledColouredGraph build_construction31(const PatternGraph& h, int x, int y, int m, int r);

// Smallest n accepted by build_Gxy_n for this pattern and edge.
int construction31_min_n(const PatternGraph& h, int x, int y);

// build_construction31 with r = max(|E(hpp)|+1, 2) and m = n - r(|V(h)|-2).
LabelledColouredGraph build_Gxy_n(const PatternGraph& h, int x, int y, int n);

// floor(n/(k-1)) disjoint rainbow copies of K_{k-1} (k = |V(h)|) plus n mod
// (k-1) isolated vertices; all edge colours globally distinct, allocated copy
// by copy in lexicographic edge order.
ColouredGraph build_pendant(const PatternGraph& h, int n);

// Component with the most vertices, then the most edges, then the lowest
// vertex index; relabelled by ascending original index.
PatternGraph largest_component(const PatternGraph& h);

struct DisconnectResult {
    ColouredGraph graph;
    // Whether the inner graph's saturation was actually checked (only done at
    // small scale; larger inputs are trusted).
    bool inner_verified = false;
};

// Assembly for a disconnected pattern h around an inner graph that is
// saturated for h's largest component H': the disjoint union of inner, s-1
// copies of two H' glued at vertex 0 (s = number of components isomorphic to
// H'), and two copies of every other component. Non-inner edges are rainbow
// in colours above everything inner uses. Layout: inner vertices first, then
// the glued copies, then the component pairs, in that order.
DisconnectResult build_disconnect(const PatternGraph& h, const ColouredGraph& inner,
    std::optional<int> expected_n = std::nullopt);

// Complete graph on s element-vertices (indices 0..s-1, role "elem") and the
// C(s,2) pair-vertices (lexicographic, role "pair_<x>_<y>"). The two edges
// from a pair-vertex down to its own elements share that pair's colour; all
// other edges get fresh colours in lexicographic edge order.
struct CliqueGadget {
    ColouredGraph graph;
    int s = 0;
    std::vector<std::pair<VertexPair, Colour>> pair_colour; // element pair -> shared colour

    int pair_vertex(int x, int y) const; // index of the vertex {x,y}
    LabelledColouredGraph labelled() const;
};

CliqueGadget build_clique_gadget(int s);

// {x, y} plus every pair-vertex except {x,y}; induces a maximum rainbow
// clique of the gadget.
std::vector<int> gadget_T(int x, int y, const CliqueGadget& gadget);

struct CliqueConstructionParams {
    int r = 0, s = 0, t = 0;
    int gadget_size = 0, u_size = 0;
    int min_n = 0;
};

CliqueConstructionParams clique_construction_params(int r, int n);

// Host graph for saturating K_{r+2}: gadget vertices, an independent set U,
// and two t-sets T1, T2 with no edges across T1 x T2; every other pair is an
// edge. Non-gadget edges are rainbow in fresh colours, lexicographically.
// Roles: gadget roles as above, then "U", "T1", "T2" with copy = index within
// the part. Layout: gadget, U, T1, T2.
LabelledColouredGraph build_clique_construction(int r, int n);

} // namespace rsat
