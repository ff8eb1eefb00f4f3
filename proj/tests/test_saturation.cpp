#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsat/patterns.hpp"
#include "rsat/saturation.hpp"
#include "rsat/search.hpp"

#include "test_util.hpp"

#include <random>

using namespace rsat;

namespace {

const Palette kUnbounded = Palette::unbounded();

// Direct per-colour badness probe, bypassing the palette reduction.
bool naive_colour_is_bad(const ColouredGraph& g, const PatternGraph& h, VertexPair e, Colour c)
{
    SearchConstraint constraint;
    constraint.required_edge = e;
    return !find_rainbow_embedding(g.with_edge(e.first, e.second, c), h, constraint).has_value();
}

} // namespace

TEST_CASE("bad colours on a two-edge path")
{
    ColouredGraph path(3, {{0, 1, 0}, {1, 2, 1}});
    auto k3 = *named_pattern("k3");

    auto bad = bad_colours(path, k3, {0, 2}, kUnbounded);
    CHECK(bad.colours == std::vector<Colour>{0, 1});
    CHECK(!bad.fresh_bad);
    CHECK(is_bad(path, k3, {0, 2}, kUnbounded) == 0);
}

TEST_CASE("bad colours on an edgeless graph")
{
    ColouredGraph g(3, {});
    auto k3 = *named_pattern("k3");
    for (auto e : g.non_edges()) {
        auto bad = bad_colours(g, k3, e, kUnbounded);
        CHECK(bad.colours.empty()); // nothing is used
        CHECK(bad.fresh_bad);
        CHECK(is_bad(g, k3, e, kUnbounded) == 0); // the fresh representative
    }
}

TEST_CASE("bad colour queries reject existing edges")
{
    ColouredGraph g(3, {{0, 1, 0}});
    CHECK_THROWS_AS(bad_colours(g, *named_pattern("k3"), {0, 1}, kUnbounded), Error);
    CHECK_THROWS_AS(is_bad(g, *named_pattern("k3"), {1, 0}, kUnbounded), Error);
}

TEST_CASE("bounded palettes enumerate every colour")
{
    ColouredGraph path(3, {{0, 1, 0}, {1, 2, 1}});
    auto k3 = *named_pattern("k3");

    auto bad2 = bad_colours(path, k3, {0, 2}, Palette::bounded(2));
    CHECK(bad2.colours == std::vector<Colour>{0, 1});
    CHECK(!bad2.fresh_bad);
    // colour 2 completes a rainbow triangle, so it is good
    CHECK(bad_colours(path, k3, {0, 2}, Palette::bounded(3)).colours == std::vector<Colour>{0, 1});

    // the graph's own colours must fit inside the palette
    CHECK_THROWS_AS(bad_colours(ColouredGraph(3, {{0, 1, 7}}), k3, {0, 2}, Palette::bounded(3)), Error);
    CHECK_THROWS_AS(Palette::bounded(0), Error);
}

TEST_CASE("saturation report basics")
{
    auto k3 = *named_pattern("k3");

    ColouredGraph mono(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
    auto rep = saturation_report(mono, k3, kUnbounded);
    CHECK(!rep.has_rainbow);
    CHECK(rep.bad_nonedges.empty());
    CHECK(rep.is_saturated);

    ColouredGraph rainbow(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
    auto rep2 = saturation_report(rainbow, k3, kUnbounded);
    CHECK(rep2.has_rainbow);
    REQUIRE(rep2.rainbow_witness.has_value());
    CHECK(is_valid_rainbow_embedding(rainbow, k3, *rep2.rainbow_witness));
    CHECK(!rep2.is_saturated);

    ColouredGraph path(3, {{0, 1, 0}, {1, 2, 1}});
    auto rep3 = saturation_report(path, k3, kUnbounded);
    CHECK(!rep3.has_rainbow);
    REQUIRE(rep3.bad_nonedges.size() == 1);
    CHECK(rep3.bad_nonedges[0].edge == VertexPair{0, 2});
    CHECK(!rep3.is_saturated);
}

TEST_CASE("palette too small is flagged, not rejected")
{
    ColouredGraph mono(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
    auto rep = saturation_report(mono, *named_pattern("k3"), Palette::bounded(2));
    CHECK(rep.palette_too_small);
    CHECK(rep.is_saturated); // complete graph: no non-edges to be bad
}

TEST_CASE("serial and parallel reports agree")
{
    std::mt19937 rng(21);
    for (int i = 0; i < 40; ++i) {
        auto g = testutil::random_coloured(rng, 7, 10, 4);
        for (const auto& h : {*named_pattern("k3"), *named_pattern("paw")}) {
            auto serial = saturation_report(g, h, kUnbounded, {.parallel = false});
            auto parallel = saturation_report(g, h, kUnbounded, {.parallel = true});
            CHECK(serial.has_rainbow == parallel.has_rainbow);
            CHECK(serial.rainbow_witness == parallel.rainbow_witness);
            CHECK(serial.bad_nonedges == parallel.bad_nonedges);
            CHECK(serial.is_saturated == parallel.is_saturated);
        }
    }
}

TEST_CASE("palette reduction matches naive fresh-colour probing")
{
    std::mt19937 rng(22);
    auto patterns = {*named_pattern("k3"), *named_pattern("p4"), *named_pattern("paw")};
    for (int i = 0; i < 60; ++i) {
        auto g = testutil::random_coloured(rng, 7, 11, 5);
        for (const auto& h : patterns) {
            for (auto e : g.non_edges()) {
                auto reduced = bad_colours(g, h, e, kUnbounded);
                auto used = used_colours(g);
                std::vector<Colour> naive_used_bad;
                for (Colour c : used)
                    if (naive_colour_is_bad(g, h, e, c))
                        naive_used_bad.push_back(c);
                CHECK(reduced.colours == naive_used_bad);
                // five explicit unused colours must all agree with the flag
                std::vector<Colour> fresh;
                for (Colour fc = fresh_colour(g); static_cast<int>(fresh.size()) < 5; ++fc)
                    if (!std::binary_search(used.begin(), used.end(), fc))
                        fresh.push_back(fc);
                fresh.back() += 1009;
                for (Colour fc : fresh)
                    CHECK(naive_colour_is_bad(g, h, e, fc) == reduced.fresh_bad);
            }
        }
    }
}

TEST_CASE("absorb completes an edgeless graph to a monochromatic triangle")
{
    ColouredGraph g(3, {});
    auto k3 = *named_pattern("k3");
    auto result = absorb(g, k3, kUnbounded);
    REQUIRE(result.added.size() == 3);
    for (const auto& [e, c] : result.added)
        CHECK(c == 0);
    CHECK(result.graph.edge_count() == 3);
    CHECK(saturation_report(result.graph, k3, kUnbounded).is_saturated);
}

TEST_CASE("absorb leaves a saturated graph unchanged")
{
    ColouredGraph mono(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
    auto result = absorb(mono, *named_pattern("k3"), kUnbounded);
    CHECK(result.added.empty());
    CHECK(result.graph == mono);
}

TEST_CASE("absorb rejects graphs that already have a rainbow copy")
{
    ColouredGraph rainbow(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
    CHECK_THROWS_AS(absorb(rainbow, *named_pattern("k3"), kUnbounded), Error);
}

TEST_CASE("absorb on random rainbow-free seeds")
{
    std::mt19937 rng(23);
    auto patterns = {*named_pattern("k3"), *named_pattern("p4"), *named_pattern("paw")};
    int done = 0;
    while (done < 30) {
        auto g = testutil::random_coloured(rng, 7, 9, 3);
        for (const auto& h : patterns) {
            if (find_rainbow_embedding(g, h).has_value())
                continue;
            ++done;
            int initially_bad = 0;
            for (auto e : g.non_edges())
                initially_bad += is_bad(g, h, e, kUnbounded).has_value();

            auto result = absorb(g, h, kUnbounded);
            CHECK(result.graph.edge_count() <= g.edge_count() + initially_bad);
            CHECK(static_cast<int>(result.added.size()) <= initially_bad);
            CHECK(saturation_report(result.graph, h, kUnbounded).is_saturated);
            // candidates are walked lexicographically, so additions come out sorted
            CHECK(std::is_sorted(result.added.begin(), result.added.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; }));

            // replay: the graph stays rainbow-free after every single addition
            ColouredGraph cur = g;
            for (const auto& [e, c] : result.added) {
                cur = cur.with_edge(e.first, e.second, c);
                CHECK(!find_rainbow_embedding(cur, h).has_value());
            }
            CHECK(cur == result.graph);
        }
    }
}

TEST_CASE("absorb picks the first bad colour in canonical order")
{
    // non-edge (0,2): both used colours are bad; canonical pick is 0
    ColouredGraph path(3, {{0, 1, 0}, {1, 2, 1}});
    auto result = absorb(path, *named_pattern("k3"), kUnbounded);
    REQUIRE(result.added.size() == 1);
    CHECK(result.added[0] == std::pair<VertexPair, Colour>{{0, 2}, 0});
}
