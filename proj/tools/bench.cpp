// Timing harness comparing the fast engines against their serial references:
// the pruned searcher vs brute force, and the OpenMP non-edge scans vs the
// same scans pinned to one thread. Results are checked for agreement, so this
// doubles as a coarse consistency test.

#include "rsat/constructions.hpp"
#include "rsat/parallel.hpp"
#include "rsat/patterns.hpp"
#include "rsat/saturation.hpp"
#include "rsat/search.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>

using namespace rsat;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void row(const char* name, double serial_ms, double fast_ms, bool agree)
{
    std::printf("%-38s %10.1f ms %10.1f ms %7.2fx   %s\n", name, serial_ms, fast_ms,
        fast_ms > 0 ? serial_ms / fast_ms : 0.0, agree ? "results agree" : "MISMATCH");
}

ColouredGraph random_coloured(std::mt19937& rng, int n, int edges, int colours)
{
    std::vector<VertexPair> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<ColouredEdge> es;
    for (int i = 0; i < std::min<int>(edges, pairs.size()); ++i)
        es.push_back({pairs[i].first, pairs[i].second, static_cast<Colour>(rng() % colours)});
    return ColouredGraph(n, std::move(es));
}

void bench_engine_vs_bruteforce(int rounds)
{
    std::mt19937 rng(1);
    std::vector<ColouredGraph> graphs;
    for (int i = 0; i < rounds; ++i)
        graphs.push_back(random_coloured(rng, 8, 16, 6));
    auto patterns = {*named_pattern("k3"), *named_pattern("p4"), *named_pattern("paw"), *named_pattern("c5")};

    int fast_hits = 0, slow_hits = 0;
    auto t0 = Clock::now();
    for (const auto& g : graphs)
        for (const auto& h : patterns)
            slow_hits += reference::find_rainbow_embedding_bruteforce(g, h).has_value();
    double slow_ms = ms_since(t0);

    t0 = Clock::now();
    for (const auto& g : graphs)
        for (const auto& h : patterns)
            fast_hits += find_rainbow_embedding(g, h).has_value();
    double fast_ms = ms_since(t0);

    row("embedding: brute force vs pruned", slow_ms, fast_ms, fast_hits == slow_hits);
}

void bench_saturation_scan(int n)
{
    auto g = build_Gxy_n(*named_pattern("k4"), 0, 1, n);
    auto h = *named_pattern("k4");

    auto t0 = Clock::now();
    auto serial = saturation_report(g.graph, h, Palette::unbounded(), {.parallel = false});
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    auto parallel = saturation_report(g.graph, h, Palette::unbounded(), {.parallel = true});
    double parallel_ms = ms_since(t0);

    std::string name = "saturation scan, construction n=" + std::to_string(n);
    row(name.c_str(), serial_ms, parallel_ms,
        serial.is_saturated == parallel.is_saturated && serial.bad_nonedges == parallel.bad_nonedges);
}

void bench_clique_goodness(int r, int n, int sample)
{
    auto g = build_clique_construction(r, n);
    PatternGraph target(r + 2, [&] {
        std::vector<VertexPair> es;
        for (int u = 0; u < r + 2; ++u)
            for (int v = u + 1; v < r + 2; ++v)
                es.emplace_back(u, v);
        return es;
    }());

    std::vector<VertexPair> nonedges;
    for (auto e : g.graph.non_edges()) {
        if (g.vertex_labels[e.first].role == "U" && g.vertex_labels[e.second].role == "U")
            nonedges.push_back(e);
        if (static_cast<int>(nonedges.size()) == sample)
            break;
    }

    std::vector<char> serial_bad(nonedges.size()), parallel_bad(nonedges.size());
    auto t0 = Clock::now();
    for (size_t i = 0; i < nonedges.size(); ++i)
        serial_bad[i] = is_bad(g.graph, target, nonedges[i], Palette::unbounded()).has_value();
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(nonedges.size()); ++i)
        parallel_bad[i] = is_bad(g.graph, target, nonedges[i], Palette::unbounded()).has_value();
    double parallel_ms = ms_since(t0);

    std::string name = "clique goodness, r=" + std::to_string(r) + " n=" + std::to_string(n)
        + " (" + std::to_string(nonedges.size()) + " non-edges)";
    row(name.c_str(), serial_ms, parallel_ms, serial_bad == parallel_bad);
}

} // namespace

int main(int argc, char** argv)
{
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0)
            quick = true;
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            set_max_threads(std::atoi(argv[++i]));
        else {
            std::fprintf(stderr, "usage: %s [--quick] [--threads K]\n", argv[0]);
            return 2;
        }
    }

    std::printf("threads available: %d\n", max_threads());
    std::printf("%-38s %13s %13s %9s\n", "benchmark", "serial", "fast", "speedup");

    bench_engine_vs_bruteforce(quick ? 40 : 400);
    bench_saturation_scan(quick ? 12 : 20);
    bench_clique_goodness(10, quick ? 30 : 40, quick ? 12 : 60);
    return 0;
}
