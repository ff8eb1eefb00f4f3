#include "rsat/graph.hpp"

#include <algorithm>
#include <numeric>

namespace rsat {

namespace {

void check_vertex(int v, int n, const char* what)
{
    if (v < 0 || v >= n)
        throw Error(std::string(what) + ": vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}

} // namespace

PatternGraph::PatternGraph(int n, std::vector<VertexPair> edges)
    : n_(n)
{
    if (n < 0)
        throw Error("pattern graph: negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_vertex(u, n, "pattern graph");
        check_vertex(v, n, "pattern graph");
        if (u == v)
            throw Error("pattern graph: loop at vertex " + std::to_string(u));
        edges_.push_back(ordered(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error("pattern graph: duplicate edge");
    adj_.resize(n_);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end());
}

bool PatternGraph::has_edge(int u, int v) const
{
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool PatternGraph::is_complete() const
{
    return static_cast<long long>(edges_.size()) * 2 == static_cast<long long>(n_) * (n_ - 1);
}

bool PatternGraph::is_connected() const
{
    if (n_ <= 1)
        return true;
    return static_cast<int>(components().size()) == 1;
}

int PatternGraph::min_degree() const
{
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v)
        d = std::min(d, degree(v));
    return d;
}

std::vector<std::vector<int>> PatternGraph::components() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int w : adj_[comp[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

PatternGraph PatternGraph::induced(const std::vector<int>& vertices) const
{
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    std::vector<int> index(n_, -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        check_vertex(vs[i], n_, "induced subgraph");
        index[vs[i]] = static_cast<int>(i);
    }
    std::vector<VertexPair> es;
    for (auto [u, v] : edges_)
        if (index[u] >= 0 && index[v] >= 0)
            es.push_back(ordered(index[u], index[v]));
    return PatternGraph(static_cast<int>(vs.size()), std::move(es));
}

ColouredGraph::ColouredGraph(int n, std::vector<ColouredEdge> edges)
    : n_(n)
{
    if (n < 0)
        throw Error("coloured graph: negative vertex count");
    edges_.reserve(edges.size());
    for (auto e : edges) {
        check_vertex(e.u, n, "coloured graph");
        check_vertex(e.v, n, "coloured graph");
        if (e.u == e.v)
            throw Error("coloured graph: loop at vertex " + std::to_string(e.u));
        if (e.colour < 0)
            throw Error("coloured graph: negative colour on edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        auto [u, v] = ordered(e.u, e.v);
        edges_.push_back({u, v, e.colour});
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw Error("coloured graph: duplicate edge (" + std::to_string(edges_[i].u) + "," + std::to_string(edges_[i].v) + ")");
    adj_.resize(n_);
    for (const auto& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.colour);
        adj_[e.v].emplace_back(e.u, e.colour);
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end());
}

std::optional<Colour> ColouredGraph::colour_of(int u, int v) const
{
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        return std::nullopt;
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), std::pair<int, Colour>{v, -1});
    if (it != a.end() && it->first == v)
        return it->second;
    return std::nullopt;
}

ColouredGraph ColouredGraph::with_edge(int u, int v, Colour c) const
{
    if (has_edge(u, v))
        throw Error("with_edge: (" + std::to_string(u) + "," + std::to_string(v) + ") is already an edge");
    auto es = edges_;
    auto [a, b] = ordered(u, v);
    es.push_back({a, b, c});
    return ColouredGraph(n_, std::move(es));
}

std::vector<VertexPair> ColouredGraph::non_edges() const
{
    std::vector<VertexPair> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v))
                out.emplace_back(u, v);
    return out;
}

ColouredGraph ColouredGraph::induced(const std::vector<int>& vertices) const
{
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    std::vector<int> index(n_, -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        check_vertex(vs[i], n_, "induced subgraph");
        index[vs[i]] = static_cast<int>(i);
    }
    std::vector<ColouredEdge> es;
    for (const auto& e : edges_)
        if (index[e.u] >= 0 && index[e.v] >= 0)
            es.push_back({index[e.u], index[e.v], e.colour});
    return ColouredGraph(static_cast<int>(vs.size()), std::move(es));
}

std::vector<Colour> used_colours(const ColouredGraph& g)
{
    std::vector<Colour> cs;
    cs.reserve(g.edges().size());
    for (const auto& e : g.edges())
        cs.push_back(e.colour);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

Colour fresh_colour(const ColouredGraph& g)
{
    Colour c = 0;
    for (Colour used : used_colours(g)) {
        if (used > c)
            break;
        if (used == c)
            ++c;
    }
    return c;
}

std::optional<VertexPair> LabelledColouredGraph::label_of(int u, int v) const
{
    VertexPair key = ordered(u, v);
    auto it = std::lower_bound(edge_labels.begin(), edge_labels.end(), key,
        [](const auto& entry, const VertexPair& k) { return entry.first < k; });
    if (it != edge_labels.end() && it->first == key)
        return it->second;
    return std::nullopt;
}

} // namespace rsat
