#include "rsat/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rsat {

namespace {

// Dense ids for the host graph's colour set, so colour-usage masks fit in a
// few machine words.
struct ColourIndex {
    std::vector<Colour> sorted;

    explicit ColourIndex(const ColouredGraph& g)
        : sorted(used_colours(g))
    {
    }

    int compact(Colour c) const
    {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
        return (it != sorted.end() && *it == c) ? static_cast<int>(it - sorted.begin()) : -1;
    }

    int size() const { return static_cast<int>(sorted.size()); }
};

struct Mask {
    std::vector<uint64_t> w;

    explicit Mask(int bits)
        : w((bits + 63) / 64, 0)
    {
    }

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
};

// Placement order for the backtracking search: each step picks the pattern
// vertex with the most already-placed neighbours (then highest degree, then
// lowest index).
std::vector<int> placement_order(const PatternGraph& h, const std::vector<int>& preassigned)
{
    const int nh = h.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(nh, 0);
    for (int p : preassigned) {
        order.push_back(p);
        placed[p] = 1;
    }
    while (static_cast<int>(order.size()) < nh) {
        int bestv = -1, best_back = -1, best_deg = -1;
        for (int v = 0; v < nh; ++v) {
            if (placed[v])
                continue;
            int back = 0;
            for (int u : h.neighbours(v))
                back += placed[u];
            if (back > best_back || (back == best_back && h.degree(v) > best_deg)) {
                bestv = v;
                best_back = back;
                best_deg = h.degree(v);
            }
        }
        order.push_back(bestv);
        placed[bestv] = 1;
    }
    return order;
}

struct EmbeddingSearch {
    const ColouredGraph& g;
    const PatternGraph& h;
    std::optional<Colour> forbidden;
    ColourIndex colours;
    Mask colour_used;
    std::vector<char> vertex_used;
    std::vector<int> order;
    std::vector<std::vector<int>> parents; // per position: earlier positions adjacent in h
    std::vector<int> image;                // per position: host vertex
    std::vector<std::vector<int>> taken_buf;

    EmbeddingSearch(const ColouredGraph& g_, const PatternGraph& h_, std::optional<Colour> forbidden_)
        : g(g_)
        , h(h_)
        , forbidden(forbidden_)
        , colours(g_)
        , colour_used(std::max(colours.size(), 1))
        , vertex_used(g_.vertex_count(), 0)
        , taken_buf(h_.vertex_count())
    {
    }

    bool run(const std::vector<std::pair<int, int>>& preassign)
    {
        std::vector<int> pre;
        pre.reserve(preassign.size());
        for (auto [p, gv] : preassign)
            pre.push_back(p);
        order = placement_order(h, pre);
        const int nh = h.vertex_count();
        std::vector<int> pos(nh);
        for (int k = 0; k < nh; ++k)
            pos[order[k]] = k;
        parents.assign(nh, {});
        for (int k = 0; k < nh; ++k)
            for (int u : h.neighbours(order[k]))
                if (pos[u] < k)
                    parents[k].push_back(pos[u]);
        image.assign(nh, -1);

        return place_preassigned(preassign, 0);
    }

    bool place_preassigned(const std::vector<std::pair<int, int>>& preassign, size_t i)
    {
        if (i == preassign.size())
            return extend(static_cast<int>(preassign.size()));
        return try_vertex(static_cast<int>(i), preassign[i].second,
            [&] { return place_preassigned(preassign, i + 1); });
    }

    template <typename Next>
    bool try_vertex(int k, int gv, Next&& next)
    {
        if (vertex_used[gv])
            return false;
        const int p = order[k];
        if (g.degree(gv) < h.degree(p))
            return false;
        auto& taken = taken_buf[k];
        taken.clear();
        for (int j : parents[k]) {
            auto col = g.colour_of(image[j], gv);
            if (!col || (forbidden && *col == *forbidden))
                return false;
            int ci = colours.compact(*col);
            if (colour_used.test(ci))
                return false;
            for (int t : taken)
                if (t == ci)
                    return false;
            taken.push_back(ci);
        }
        for (int t : taken)
            colour_used.set(t);
        vertex_used[gv] = 1;
        image[k] = gv;
        if (next())
            return true;
        image[k] = -1;
        vertex_used[gv] = 0;
        for (int t : taken_buf[k])
            colour_used.clear(t);
        return false;
    }

    bool extend(int k)
    {
        if (k == h.vertex_count())
            return true;
        auto next = [&] { return extend(k + 1); };
        if (parents[k].empty()) {
            for (int gv = 0; gv < g.vertex_count(); ++gv)
                if (try_vertex(k, gv, next))
                    return true;
        }
        else {
            for (auto [nb, c] : g.adjacency(image[parents[k][0]]))
                if (try_vertex(k, nb, next))
                    return true;
        }
        return false;
    }

    Embedding embedding() const
    {
        Embedding e;
        e.map.resize(h.vertex_count());
        for (int k = 0; k < h.vertex_count(); ++k)
            e.map[order[k]] = image[k];
        return e;
    }
};

// Degeneracy order: repeatedly remove the vertex of minimum residual degree,
// lowest index first on ties.
std::vector<int> degeneracy_order(const ColouredGraph& g)
{
    const int n = g.vertex_count();
    std::vector<int> deg(n), order;
    std::vector<char> gone(n, 0);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best < 0 || deg[v] < deg[best]))
                best = v;
        gone[best] = 1;
        order.push_back(best);
        for (auto [u, c] : g.adjacency(best))
            if (!gone[u])
                --deg[u];
    }
    return order;
}

struct CliqueEngine {
    const ColouredGraph& g;
    int n, words;
    std::vector<int> order, pos;
    std::vector<uint64_t> posadj; // n rows in position space, forbidden edges dropped
    ColourIndex colours;
    Mask colour_used;
    std::vector<int> current; // positions
    std::vector<int> best;    // positions
    std::vector<std::vector<uint64_t>> buf;
    std::vector<std::vector<int>> taken_buf;
    int target = -1; // -1: maximize, else stop at this size
    bool stop = false;
    std::optional<Colour> forbidden;

    CliqueEngine(const ColouredGraph& g_, std::optional<Colour> forbidden_)
        : g(g_)
        , n(g_.vertex_count())
        , words(std::max((n + 63) / 64, 1))
        , order(degeneracy_order(g_))
        , pos(n)
        , posadj(static_cast<size_t>(n) * words, 0)
        , colours(g_)
        , colour_used(std::max(colours.size(), 1))
        , buf(n + 2, std::vector<uint64_t>(words))
        , taken_buf(n + 2)
        , forbidden(forbidden_)
    {
        for (int i = 0; i < n; ++i)
            pos[order[i]] = i;
        for (int v = 0; v < n; ++v)
            for (auto [u, c] : g.adjacency(v)) {
                if (forbidden && c == *forbidden)
                    continue;
                posadj[static_cast<size_t>(pos[v]) * words + (pos[u] >> 6)] |= uint64_t{1} << (pos[u] & 63);
            }
    }

    const uint64_t* row(int p) const { return &posadj[static_cast<size_t>(p) * words]; }

    bool colour_feasible(int p, std::vector<int>& taken) const
    {
        taken.clear();
        for (int q : current) {
            auto col = g.colour_of(order[p], order[q]);
            int ci = colours.compact(*col);
            if (colour_used.test(ci))
                return false;
            for (int t : taken)
                if (t == ci)
                    return false;
            taken.push_back(ci);
        }
        return true;
    }

    int bound() const { return target >= 0 ? target - 1 : static_cast<int>(best.size()); }

    void note_current()
    {
        if (static_cast<int>(current.size()) > static_cast<int>(best.size())) {
            best = current;
            if (target >= 0 && static_cast<int>(best.size()) >= target)
                stop = true;
        }
    }

    void expand(int depth)
    {
        note_current();
        if (stop)
            return;
        uint64_t* cand = buf[depth].data();
        int rem = 0;
        for (int w = 0; w < words; ++w)
            rem += std::popcount(cand[w]);
        for (int w = 0; w < words && !stop; ++w) {
            while (cand[w]) {
                if (static_cast<int>(current.size()) + rem <= bound())
                    return;
                int b = std::countr_zero(cand[w]);
                int p = w * 64 + b;
                cand[w] &= cand[w] - 1;
                --rem;
                auto& taken = taken_buf[depth];
                if (!colour_feasible(p, taken))
                    continue;
                for (int t : taken)
                    colour_used.set(t);
                current.push_back(p);
                uint64_t* nextcand = buf[depth + 1].data();
                const uint64_t* pr = row(p);
                for (int x = 0; x < words; ++x)
                    nextcand[x] = cand[x] & pr[x];
                expand(depth + 1);
                current.pop_back();
                for (int t : taken_buf[depth])
                    colour_used.clear(t);
                if (stop)
                    return;
            }
        }
    }

    std::vector<int> best_vertices() const
    {
        std::vector<int> vs;
        vs.reserve(best.size());
        for (int p : best)
            vs.push_back(order[p]);
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    void search_all_seeds()
    {
        for (int i = 0; i < n && !stop; ++i) {
            if (1 + (n - i - 1) <= bound())
                break; // later seeds only shrink
            current.assign(1, i);
            uint64_t* cand = buf[1].data();
            const uint64_t* r = row(i);
            for (int w = 0; w < words; ++w)
                cand[w] = r[w];
            // restrict to later positions
            for (int w = 0; w < (i >> 6); ++w)
                cand[w] = 0;
            cand[i >> 6] &= ~((uint64_t{2} << (i & 63)) - 1);
            expand(1);
            current.clear();
        }
    }

    bool search_with_required(VertexPair e)
    {
        auto col = g.colour_of(e.first, e.second);
        if (!col)
            throw Error("required edge is not an edge of the graph");
        if (forbidden && *col == *forbidden)
            return false;
        int pa = pos[e.first], pb = pos[e.second];
        current = {pa, pb};
        colour_used.set(colours.compact(*col));
        uint64_t* cand = buf[2].data();
        const uint64_t* ra = row(pa);
        const uint64_t* rb = row(pb);
        for (int w = 0; w < words; ++w)
            cand[w] = ra[w] & rb[w];
        expand(2);
        return static_cast<int>(best.size()) >= target;
    }
};

} // namespace

bool is_valid_rainbow_embedding(const ColouredGraph& g, const PatternGraph& h,
    const Embedding& e, const SearchConstraint& c)
{
    if (static_cast<int>(e.map.size()) != h.vertex_count())
        return false;
    std::vector<char> used(g.vertex_count(), 0);
    for (int gv : e.map) {
        if (gv < 0 || gv >= g.vertex_count() || used[gv])
            return false;
        used[gv] = 1;
    }
    std::vector<Colour> seen;
    bool covers_required = false;
    for (auto [u, v] : h.edges()) {
        auto col = g.colour_of(e.map[u], e.map[v]);
        if (!col)
            return false;
        if (c.forbidden_colour && *col == *c.forbidden_colour)
            return false;
        if (c.required_edge && ordered(e.map[u], e.map[v]) == ordered(c.required_edge->first, c.required_edge->second))
            covers_required = true;
        seen.push_back(*col);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        return false;
    if (c.required_edge && !covers_required)
        return false;
    return true;
}

std::optional<Embedding> find_rainbow_embedding(const ColouredGraph& g, const PatternGraph& h,
    const SearchConstraint& c)
{
    std::optional<VertexPair> required;
    if (c.required_edge) {
        required = ordered(c.required_edge->first, c.required_edge->second);
        if (!g.has_edge(required->first, required->second))
            throw Error("required edge (" + std::to_string(required->first) + ","
                + std::to_string(required->second) + ") is not an edge of the graph");
    }
    const int nh = h.vertex_count();
    if (nh > g.vertex_count())
        return std::nullopt;
    if (h.edge_count() == 0) {
        if (required)
            return std::nullopt; // no image edge can cover it
        Embedding e;
        e.map.resize(nh);
        std::iota(e.map.begin(), e.map.end(), 0);
        return e;
    }
    if (h.is_complete())
        return find_rainbow_clique(g, nh, c);

    EmbeddingSearch s(g, h, c.forbidden_colour);
    if (!required) {
        if (s.run({}))
            return s.embedding();
        return std::nullopt;
    }
    // A rainbow copy created "through" an edge must map some pattern edge onto
    // it; try each pattern edge in both orientations.
    auto [a, b] = *required;
    for (auto [p, q] : h.edges()) {
        EmbeddingSearch s1(g, h, c.forbidden_colour);
        if (s1.run({{p, a}, {q, b}}))
            return s1.embedding();
        EmbeddingSearch s2(g, h, c.forbidden_colour);
        if (s2.run({{p, b}, {q, a}}))
            return s2.embedding();
    }
    return std::nullopt;
}

MaxRainbowClique max_rainbow_clique(const ColouredGraph& g)
{
    MaxRainbowClique out;
    if (g.vertex_count() == 0)
        return out;
    CliqueEngine eng(g, std::nullopt);
    eng.search_all_seeds();
    out.size = static_cast<int>(eng.best.size());
    out.witness.map = eng.best_vertices();
    return out;
}

std::optional<Embedding> find_rainbow_clique(const ColouredGraph& g, int q, const SearchConstraint& c)
{
    if (q < 1)
        throw Error("rainbow clique size must be at least 1");
    std::optional<VertexPair> required;
    if (c.required_edge) {
        required = ordered(c.required_edge->first, c.required_edge->second);
        if (!g.has_edge(required->first, required->second))
            throw Error("required edge (" + std::to_string(required->first) + ","
                + std::to_string(required->second) + ") is not an edge of the graph");
    }
    if (q == 1) {
        if (required)
            return std::nullopt;
        if (g.vertex_count() == 0)
            return std::nullopt;
        return Embedding{{0}};
    }
    if (q > g.vertex_count())
        return std::nullopt;
    CliqueEngine eng(g, c.forbidden_colour);
    eng.target = q;
    bool found = false;
    if (required) {
        if (q == 2) {
            auto col = g.colour_of(required->first, required->second);
            if (c.forbidden_colour && col && *col == *c.forbidden_colour)
                return std::nullopt;
            return Embedding{{required->first, required->second}};
        }
        found = eng.search_with_required(*required);
    }
    else {
        eng.search_all_seeds();
        found = static_cast<int>(eng.best.size()) >= q;
    }
    if (!found)
        return std::nullopt;
    return Embedding{eng.best_vertices()};
}

bool rainbow_clique_exists(const ColouredGraph& g, int q, const SearchConstraint& c)
{
    return find_rainbow_clique(g, q, c).has_value();
}

namespace reference {

namespace {

bool bruteforce_extend(const ColouredGraph& g, const PatternGraph& h, const SearchConstraint& c,
    std::vector<int>& map, std::vector<char>& used, int k)
{
    if (k == h.vertex_count()) {
        Embedding e{map};
        return is_valid_rainbow_embedding(g, h, e, c);
    }
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
        if (used[gv])
            continue;
        used[gv] = 1;
        map[k] = gv;
        if (bruteforce_extend(g, h, c, map, used, k + 1))
            return true;
        used[gv] = 0;
    }
    return false;
}

} // namespace

std::optional<Embedding> find_rainbow_embedding_bruteforce(const ColouredGraph& g,
    const PatternGraph& h, const SearchConstraint& c)
{
    if (c.required_edge) {
        auto [a, b] = ordered(c.required_edge->first, c.required_edge->second);
        if (!g.has_edge(a, b))
            throw Error("required edge is not an edge of the graph");
    }
    if (h.vertex_count() > g.vertex_count())
        return std::nullopt;
    std::vector<int> map(h.vertex_count(), -1);
    std::vector<char> used(g.vertex_count(), 0);
    if (bruteforce_extend(g, h, c, map, used, 0))
        return Embedding{map};
    return std::nullopt;
}

} // namespace reference

} // namespace rsat
