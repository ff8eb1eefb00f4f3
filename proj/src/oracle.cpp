#include "rsat/oracle.hpp"

#include "rsat/search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsat {

namespace {

// Pair (u, v), u < v, at lexicographic index i over n vertices.
std::vector<VertexPair> pair_universe(int n)
{
    std::vector<VertexPair> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return pairs;
}

// For every non-identity permutation of the vertices, where each pair index
// lands.
std::vector<std::vector<int>> pair_permutations(int n, const std::vector<VertexPair>& pairs)
{
    std::vector<int> pair_index(n * n, -1);
    for (size_t i = 0; i < pairs.size(); ++i) {
        pair_index[pairs[i].first * n + pairs[i].second] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> tables;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<int> table(pairs.size());
        for (size_t i = 0; i < pairs.size(); ++i) {
            auto [u, v] = ordered(perm[pairs[i].first], perm[pairs[i].second]);
            table[i] = pair_index[u * n + v];
        }
        tables.push_back(std::move(table));
    }
    return tables;
}

bool is_canonical(uint32_t mask, const std::vector<std::vector<int>>& tables)
{
    for (const auto& table : tables) {
        uint32_t permuted = 0;
        for (uint32_t bits = mask; bits;) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            permuted |= uint32_t{1} << table[b];
        }
        if (permuted < mask)
            return false;
    }
    return true;
}

// Restricted growth strings = set partitions of [k], lexicographic. visit
// returns false to stop early; the walker reports whether it ran to the end.
bool partitions_rec(std::vector<int>& rgs, int i, int prefix_max, int max_blocks,
    const std::function<bool(const std::vector<int>&)>& visit)
{
    if (i == static_cast<int>(rgs.size()))
        return visit(rgs);
    const int limit = std::min(prefix_max + 1, max_blocks - 1);
    for (int v = 0; v <= limit; ++v) {
        rgs[i] = v;
        if (!partitions_rec(rgs, i + 1, std::max(prefix_max, v), max_blocks, visit))
            return false;
    }
    return true;
}

void partitions(int k, int max_blocks, const std::function<bool(const std::vector<int>&)>& visit)
{
    std::vector<int> rgs(k, 0);
    if (k == 0) {
        visit(rgs);
        return;
    }
    partitions_rec(rgs, 0, -1, max_blocks, visit);
}

bool is_saturated_quick(const ColouredGraph& g, const PatternGraph& h, const Palette& p)
{
    if (find_rainbow_embedding(g, h).has_value())
        return false;
    for (VertexPair e : g.non_edges())
        if (is_bad(g, h, e, p).has_value())
            return false;
    return true;
}

} // namespace

OracleResult exact_rsat(int n, const PatternGraph& h, const Palette& p, const OracleOptions& opts)
{
    if (n < 1)
        throw Error("oracle: n must be positive");
    if (n > 6 && !opts.allow_large)
        throw Error("oracle: n=" + std::to_string(n) + " exceeds the supported limit of 6");
    if (n > 8)
        throw Error("oracle: n=" + std::to_string(n) + " is out of reach for exhaustive enumeration");
    if (h.edge_count() == 0)
        throw Error("oracle: pattern must have at least one edge");

    OracleResult result;
    result.n = n;
    result.palette = p;

    const auto pairs = pair_universe(n);
    const int npairs = static_cast<int>(pairs.size());
    const auto tables = pair_permutations(n, pairs);
    const int max_edges = std::min(opts.edge_budget.value_or(npairs), npairs);
    const int max_blocks = p.is_bounded() ? *p.limit : npairs + 1;

    for (int k = 0; k <= max_edges && !result.min_edges; ++k) {
        // canonical representatives with k edges, ascending
        std::vector<uint32_t> masks;
        if (k == 0)
            masks.push_back(0);
        else {
            for (uint32_t mask = (uint32_t{1} << k) - 1; mask < (uint32_t{1} << npairs);) {
                if (is_canonical(mask, tables))
                    masks.push_back(mask);
                uint32_t c = mask & -mask, r = mask + c; // Gosper's hack
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }

        std::vector<long long> hit(masks.size(), -1); // first saturated partition, else -1
        std::vector<long long> tried(masks.size(), 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
        for (long long mi = 0; mi < static_cast<long long>(masks.size()); ++mi) {
            std::vector<VertexPair> edge_list;
            for (uint32_t bits = masks[mi]; bits;) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                edge_list.push_back(pairs[b]);
            }
            long long pi = 0;
            partitions(k, max_blocks, [&](const std::vector<int>& rgs) {
                ++tried[mi];
                std::vector<ColouredEdge> es;
                for (int i = 0; i < k; ++i)
                    es.push_back({edge_list[i].first, edge_list[i].second, rgs[i]});
                ColouredGraph cg(n, std::move(es));
                if (is_saturated_quick(cg, h, p)) {
                    hit[mi] = pi;
                    return false; // stop at this graph's first saturated colouring
                }
                ++pi;
                return true;
            });
        }

        result.stats.graphs_examined += static_cast<long long>(masks.size());
        for (long long t : tried)
            result.stats.colourings_examined += t;

        for (size_t mi = 0; mi < masks.size() && !result.min_edges; ++mi) {
            if (hit[mi] < 0)
                continue;
            // rebuild the witness: walk partitions again up to the recorded one
            std::vector<VertexPair> edge_list;
            for (uint32_t bits = masks[mi]; bits;) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                edge_list.push_back(pairs[b]);
            }
            long long pi = 0;
            partitions(k, max_blocks, [&](const std::vector<int>& rgs) {
                if (pi++ < hit[mi])
                    return true;
                std::vector<ColouredEdge> es;
                for (int i = 0; i < k; ++i)
                    es.push_back({edge_list[i].first, edge_list[i].second, rgs[i]});
                result.witness = ColouredGraph(n, std::move(es));
                return false;
            });
            result.min_edges = k;
        }
    }

    if (result.witness) {
        auto check = saturation_report(*result.witness, h, p);
        if (!check.is_saturated)
            throw Error("oracle: internal error, witness failed re-verification");
    }
    return result;
}

UpperBoundResult verify_upper_bound(const ColouredGraph& g, const PatternGraph& h, const Palette& p)
{
    AbsorbResult absorbed = absorb(g, h, p); // throws if g already has a rainbow copy
    auto report = saturation_report(absorbed.graph, h, p);
    return {absorbed.graph.edge_count(), report.is_saturated};
}

} // namespace rsat
