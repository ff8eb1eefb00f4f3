#include "rsat/constructions.hpp"

#include "rsat/saturation.hpp"
#include "rsat/search.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rsat {

namespace {

constexpr int kInnerCheckLimit = 12; // brute-force saturation check is cheap below this

std::string edge_str(int u, int v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

ContractionData contract(const PatternGraph& h, int x, int y)
{
    if (!h.has_edge(x, y))
        throw Error("contract: " + edge_str(x, y) + " is not an edge of the pattern");
    ContractionData d;
    d.h = h;
    d.x = x;
    d.y = y;

    const int n = h.vertex_count();
    d.hprime_index.assign(n, -1);
    d.hprime_to_h.assign(n - 1, -1);
    d.hprime_index[x] = 0;
    d.hprime_index[y] = 0;
    int next = 1;
    for (int v = 0; v < n; ++v) {
        if (v == x || v == y)
            continue;
        d.hprime_index[v] = next;
        d.hprime_to_h[next] = v;
        ++next;
    }

    std::set<VertexPair> hp_edges;
    for (auto [u, v] : h.edges()) {
        int a = d.hprime_index[u], b = d.hprime_index[v];
        if (a == b)
            continue; // the contracted edge itself
        hp_edges.insert(ordered(a, b));
    }
    d.hprime = PatternGraph(n - 1, std::vector<VertexPair>(hp_edges.begin(), hp_edges.end()));

    for (int v : h.neighbours(x))
        if (v != y && h.has_edge(y, v))
            d.common.push_back(v);
    for (int s : d.common) {
        d.t_edges.push_back(ordered(x, s));
        d.t_edges.push_back(ordered(y, s));
        d.tprime_edges.push_back({0, d.hprime_index[s]});
    }
    std::sort(d.t_edges.begin(), d.t_edges.end());
    std::sort(d.tprime_edges.begin(), d.tprime_edges.end());

    std::vector<VertexPair> hpp_edges;
    for (auto e : d.hprime.edges())
        if (!std::binary_search(d.tprime_edges.begin(), d.tprime_edges.end(), e))
            hpp_edges.push_back(e);
    d.hpp = PatternGraph(n - 1, std::move(hpp_edges));
    return d;
}

LabelledColouredGraph build_construction31(const PatternGraph& h, int x, int y, int m, int r)
{
    if (h.vertex_count() < 3)
        throw Error("construction: pattern must have at least 3 vertices");
    if (!h.is_connected())
        throw Error("construction: pattern must be connected");
    ContractionData d = contract(h, x, y);
    if (d.common.empty())
        throw Error("construction: edge " + edge_str(x, y)
            + " is not contained in a triangle; use the pendant builder or another construction for such patterns");
    const int nepp = d.hpp.edge_count();
    const int rmin = std::max(nepp + 1, 2);
    if (m < 2)
        throw Error("construction: m must be at least 2 (got " + std::to_string(m) + ")");
    if (r < rmin)
        throw Error("construction: r must be at least " + std::to_string(rmin)
            + " for this pattern and edge (got " + std::to_string(r) + ")");

    const int q = h.vertex_count() - 2; // vertices per copy
    const int n = m + r * q;
    const Colour black = nepp;

    // hpp edge -> base colour (lexicographic edge order)
    const auto& hpp_edges = d.hpp.edges();
    auto base_colour = [&](VertexPair label) -> Colour {
        auto it = std::lower_bound(hpp_edges.begin(), hpp_edges.end(), label);
        return static_cast<Colour>(it - hpp_edges.begin());
    };
    auto vertex_of = [&](int copy, int hp_vertex) { return m + copy * q + (hp_vertex - 1); };

    LabelledColouredGraph out;
    out.vertex_labels.resize(n);
    for (int i = 0; i < m; ++i)
        out.vertex_labels[i] = {"M", -1};
    for (int c = 0; c < r; ++c)
        for (int j = 1; j <= q; ++j)
            out.vertex_labels[vertex_of(c, j)] = {"v" + std::to_string(j), c};

    std::vector<ColouredEdge> edges;
    Colour next_unique = nepp + 1;
    for (int c = 0; c < r; ++c) {
        // edges of the copy away from the merged vertex
        for (auto [a, b] : d.hprime.edges()) {
            if (a == 0)
                continue;
            VertexPair label{a, b};
            Colour col = (c < nepp && hpp_edges[c] == label) ? black : base_colour(label);
            VertexPair ge = ordered(vertex_of(c, a), vertex_of(c, b));
            edges.push_back({ge.first, ge.second, col});
            out.edge_labels.emplace_back(ge, label);
        }
        // edges between M and the copy, in label order then M order
        for (int j : d.hprime.neighbours(0)) {
            VertexPair label{0, j};
            const bool in_tprime = std::binary_search(d.tprime_edges.begin(), d.tprime_edges.end(), label);
            const bool blackened = !in_tprime && c < nepp && hpp_edges[c] == label;
            for (int i = 0; i < m; ++i) {
                Colour col = in_tprime ? next_unique++ : (blackened ? black : base_colour(label));
                VertexPair ge = ordered(i, vertex_of(c, j));
                edges.push_back({ge.first, ge.second, col});
                out.edge_labels.emplace_back(ge, label);
            }
        }
    }
    out.graph = ColouredGraph(n, std::move(edges));
    std::sort(out.edge_labels.begin(), out.edge_labels.end());
    return out;
}

int construction31_min_n(const PatternGraph& h, int x, int y)
{
    ContractionData d = contract(h, x, y);
    const int r = std::max(d.hpp.edge_count() + 1, 2);
    return r * (h.vertex_count() - 2) + 2;
}

LabelledColouredGraph build_Gxy_n(const PatternGraph& h, int x, int y, int n)
{
    if (h.vertex_count() < 3)
        throw Error("construction: pattern must have at least 3 vertices");
    if (!h.is_connected())
        throw Error("construction: pattern must be connected");
    ContractionData d = contract(h, x, y);
    if (d.common.empty())
        throw Error("construction: edge " + edge_str(x, y)
            + " is not contained in a triangle; use the pendant builder or another construction for such patterns");
    const int r = std::max(d.hpp.edge_count() + 1, 2);
    const int m = n - r * (h.vertex_count() - 2);
    if (m < 2)
        throw Error("construction: n=" + std::to_string(n) + " is too small; the minimum n for this pattern and edge is "
            + std::to_string(r * (h.vertex_count() - 2) + 2));
    return build_construction31(h, x, y, m, r);
}

ColouredGraph build_pendant(const PatternGraph& h, int n)
{
    const int k = h.vertex_count();
    if (k < 2)
        throw Error("pendant construction: pattern must have at least 2 vertices");
    if (!h.is_connected())
        throw Error("pendant construction: pattern must be connected");
    if (h.min_degree() != 1)
        throw Error("pendant construction: pattern must have a vertex of degree exactly 1");
    if (n < k - 1)
        throw Error("pendant construction: n must be at least " + std::to_string(k - 1));

    const int q = n / (k - 1);
    std::vector<ColouredEdge> edges;
    Colour next = 0;
    for (int c = 0; c < q; ++c) {
        const int base = c * (k - 1);
        for (int u = 0; u < k - 1; ++u)
            for (int v = u + 1; v < k - 1; ++v)
                edges.push_back({base + u, base + v, next++});
    }
    return ColouredGraph(n, std::move(edges));
}

PatternGraph largest_component(const PatternGraph& h)
{
    auto comps = h.components();
    if (comps.empty())
        return PatternGraph(0, {});
    int best = 0;
    int best_edges = h.induced(comps[0]).edge_count();
    for (size_t i = 1; i < comps.size(); ++i) {
        int e = h.induced(comps[i]).edge_count();
        if (comps[i].size() > comps[best].size()
            || (comps[i].size() == comps[best].size() && e > best_edges)) {
            best = static_cast<int>(i);
            best_edges = e;
        }
    }
    return h.induced(comps[best]);
}

namespace {

bool isomorphic(const PatternGraph& a, const PatternGraph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    // an embedding between graphs of equal size is an isomorphism; search in a
    // rainbow-coloured host so the rainbow engine reduces to plain embedding
    std::vector<ColouredEdge> es;
    Colour c = 0;
    for (auto [u, v] : b.edges())
        es.push_back({u, v, c++});
    ColouredGraph host(b.vertex_count(), std::move(es));
    return find_rainbow_embedding(host, a).has_value();
}

} // namespace

DisconnectResult build_disconnect(const PatternGraph& h, const ColouredGraph& inner,
    std::optional<int> expected_n)
{
    auto comps = h.components();
    if (comps.size() < 2)
        throw Error("disconnect construction: pattern must be disconnected");
    PatternGraph hp = largest_component(h);

    int s = 0;
    std::vector<const std::vector<int>*> others;
    for (const auto& comp : comps) {
        if (isomorphic(h.induced(comp), hp))
            ++s;
        else
            others.push_back(&comp);
    }

    const int m = 2 * (h.vertex_count() - hp.vertex_count()) - (s - 1);
    const int n = inner.vertex_count() + m;
    if (expected_n && *expected_n != n)
        throw Error("disconnect construction: vertex-count mismatch; inner graph on "
            + std::to_string(inner.vertex_count()) + " vertices yields n=" + std::to_string(n)
            + ", not " + std::to_string(*expected_n));

    DisconnectResult result;
    if (inner.vertex_count() <= kInnerCheckLimit) {
        auto report = saturation_report(inner, hp, Palette::unbounded());
        if (!report.is_saturated)
            throw Error("disconnect construction: inner graph is not saturated for the pattern's largest component");
        result.inner_verified = true;
    }

    std::vector<ColouredEdge> edges = inner.edges();
    auto used = used_colours(inner);
    Colour next = used.empty() ? 0 : used.back() + 1;
    int base = inner.vertex_count();

    // s-1 copies of two hp glued at hp's vertex 0
    const int hpn = hp.vertex_count();
    for (int copy = 0; copy + 1 < s; ++copy) {
        auto at = [&](int side, int v) { return v == 0 ? base : base + side * (hpn - 1) + v; };
        for (int side = 0; side < 2; ++side)
            for (auto [u, v] : hp.edges()) {
                auto ge = ordered(at(side, u), at(side, v));
                edges.push_back({ge.first, ge.second, next++});
            }
        base += 2 * hpn - 1;
    }
    // two copies of every component not isomorphic to hp
    for (const auto* comp : others) {
        PatternGraph cg = h.induced(*comp);
        for (int copy = 0; copy < 2; ++copy) {
            for (auto [u, v] : cg.edges())
                edges.push_back({base + u, base + v, next++});
            base += cg.vertex_count();
        }
    }

    result.graph = ColouredGraph(n, std::move(edges));
    return result;
}

int CliqueGadget::pair_vertex(int x, int y) const
{
    auto [a, b] = ordered(x, y);
    // pairs are laid out lexicographically after the s element-vertices
    return s + (a * (2 * s - a - 1)) / 2 + (b - a - 1);
}

LabelledColouredGraph CliqueGadget::labelled() const
{
    LabelledColouredGraph out;
    out.graph = graph;
    out.vertex_labels.resize(graph.vertex_count());
    for (int i = 0; i < s; ++i)
        out.vertex_labels[i] = {"elem", i};
    int idx = 0;
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b) {
            out.vertex_labels[s + idx] = {"pair_" + std::to_string(a) + "_" + std::to_string(b), idx};
            ++idx;
        }
    return out;
}

CliqueGadget build_clique_gadget(int s)
{
    if (s < 3)
        throw Error("clique gadget: s must be at least 3");
    CliqueGadget gadget;
    gadget.s = s;

    const int npairs = s * (s - 1) / 2;
    const int n = s + npairs;
    std::vector<VertexPair> pair_of(npairs);
    {
        int idx = 0;
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b)
                pair_of[idx++] = {a, b};
    }
    for (int i = 0; i < npairs; ++i)
        gadget.pair_colour.emplace_back(pair_of[i], i);

    std::vector<ColouredEdge> edges;
    Colour next = npairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Colour col;
            if (u < s && v >= s && (pair_of[v - s].first == u || pair_of[v - s].second == u))
                col = v - s; // edge from a pair-vertex down to one of its own elements
            else
                col = next++;
            edges.push_back({u, v, col});
        }
    gadget.graph = ColouredGraph(n, std::move(edges));
    return gadget;
}

std::vector<int> gadget_T(int x, int y, const CliqueGadget& gadget)
{
    if (x == y)
        throw Error("gadget_T: x and y must be distinct");
    if (x < 0 || x >= gadget.s || y < 0 || y >= gadget.s)
        throw Error("gadget_T: x and y must be element-vertices (0.." + std::to_string(gadget.s - 1) + ")");
    std::vector<int> vs{std::min(x, y), std::max(x, y)};
    const int skip = gadget.pair_vertex(x, y);
    for (int v = gadget.s; v < gadget.graph.vertex_count(); ++v)
        if (v != skip)
            vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

CliqueConstructionParams clique_construction_params(int r, int n)
{
    if (r < 10)
        throw Error("clique construction: r must be at least 10");
    CliqueConstructionParams p;
    p.r = r;
    p.s = 3;
    while ((p.s + 1) * p.s / 2 + 1 <= r)
        ++p.s;
    p.t = r - p.s * (p.s - 1) / 2 - 1;
    p.gadget_size = p.s + p.s * (p.s - 1) / 2;
    p.min_n = p.gadget_size + 2 * p.t + 2;
    p.u_size = n - 2 * p.t - p.gadget_size;
    return p;
}

LabelledColouredGraph build_clique_construction(int r, int n)
{
    CliqueConstructionParams p = clique_construction_params(r, n);
    if (p.u_size < 2)
        throw Error("clique construction: n=" + std::to_string(n) + " is too small; need at least "
            + std::to_string(p.min_n));

    CliqueGadget gadget = build_clique_gadget(p.s);
    LabelledColouredGraph out = gadget.labelled();

    const int gn = p.gadget_size;
    out.vertex_labels.resize(n);
    for (int i = 0; i < p.u_size; ++i)
        out.vertex_labels[gn + i] = {"U", i};
    for (int i = 0; i < p.t; ++i)
        out.vertex_labels[gn + p.u_size + i] = {"T1", i};
    for (int i = 0; i < p.t; ++i)
        out.vertex_labels[gn + p.u_size + p.t + i] = {"T2", i};

    auto part = [&](int v) { // 0 gadget, 1 U, 2 T1, 3 T2
        if (v < gn)
            return 0;
        if (v < gn + p.u_size)
            return 1;
        return v < gn + p.u_size + p.t ? 2 : 3;
    };

    std::vector<ColouredEdge> edges = gadget.graph.edges();
    Colour next = static_cast<Colour>(gadget.graph.edge_count() - p.s * (p.s - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int pu = part(u), pv = part(v);
            if (pu == 0 && pv == 0)
                continue; // gadget edges already coloured
            if (pu == 1 && pv == 1)
                continue; // U is independent
            if (pu == 2 && pv == 3)
                continue; // no edges across T1 x T2
            edges.push_back({u, v, next++});
        }
    out.graph = ColouredGraph(n, std::move(edges));
    return out;
}

} // namespace rsat
