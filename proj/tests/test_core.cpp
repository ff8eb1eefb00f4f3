#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsat/graph.hpp"
#include "rsat/io.hpp"
#include "rsat/patterns.hpp"

#include "test_util.hpp"

#include <random>

using namespace rsat;

TEST_CASE("used_colours")
{
    CHECK(used_colours(ColouredGraph(5, {})).empty());

    ColouredGraph k3(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 1}});
    CHECK(used_colours(k3) == std::vector<Colour>{0, 1});

    std::vector<ColouredEdge> es;
    Colour c = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            es.push_back({u, v, c++});
    CHECK(used_colours(ColouredGraph(4, es)) == std::vector<Colour>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("fresh_colour")
{
    CHECK(fresh_colour(ColouredGraph(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}})) == 3);
    CHECK(fresh_colour(ColouredGraph(3, {{0, 1, 0}, {1, 2, 2}})) == 1);
    CHECK(fresh_colour(ColouredGraph(3, {})) == 0);
}

TEST_CASE("fresh_colour is never used")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto g = testutil::random_coloured(rng, 6, 10, 5);
        auto used = used_colours(g);
        CHECK(!std::binary_search(used.begin(), used.end(), fresh_colour(g)));
    }
}

TEST_CASE("graph validation")
{
    CHECK_THROWS_AS(ColouredGraph(3, {{0, 0, 1}}), Error);
    CHECK_THROWS_AS(ColouredGraph(3, {{0, 1, 0}, {1, 0, 2}}), Error);
    CHECK_THROWS_AS(ColouredGraph(2, {{0, 5, 0}}), Error);
    CHECK_THROWS_AS(ColouredGraph(2, {{0, 1, -1}}), Error);
    CHECK_THROWS_AS(PatternGraph(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(PatternGraph(3, {{0, 1}, {1, 0}}), Error);

    // endpoints are normalized
    ColouredGraph g(3, {{2, 0, 4}});
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 2);
    CHECK(g.colour_of(2, 0) == 4);
}

TEST_CASE("json parsing")
{
    auto k3 = parse_coloured(R"({"n":3,"edges":[[0,1,0],[1,2,0],[0,2,1]]})");
    CHECK(k3.edge_count() == 3);
    CHECK(k3.colour_of(0, 2) == 1);

    auto empty = parse_coloured(R"({"n":2,"edges":[]})");
    CHECK(empty.vertex_count() == 2);
    CHECK(empty.edge_count() == 0);

    CHECK_THROWS_AS(parse_coloured(R"({"n":3,"edges":[[0,0,1]]})"), Error);
    CHECK_THROWS_AS(parse_coloured(R"({"n":3,"edges":[[0,1]]})"), Error); // colour missing
    CHECK_THROWS_AS(parse_coloured("{"), Error);
    CHECK_THROWS_AS(parse_coloured(R"("hi")"), Error);
    CHECK_THROWS_AS(parse_pattern(R"({"edges":[]})"), Error);

    auto p = parse_pattern(R"({"n":4,"edges":[[0,1],[2,3]]})");
    CHECK(p.vertex_count() == 4);
    CHECK(p.has_edge(3, 2));
}

TEST_CASE("round trips")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto g = testutil::random_coloured(rng, 7, 12, 6);
        CHECK(parse_coloured(serialize(g)) == g);
        auto h = testutil::random_pattern(rng, 6, 0.4);
        CHECK(parse_pattern(serialize(h)) == h);
    }
}

TEST_CASE("labelled round trip")
{
    LabelledColouredGraph g;
    g.graph = ColouredGraph(3, {{0, 1, 0}, {1, 2, 5}});
    g.vertex_labels = {{"M", -1}, {"v1", 0}, {"v1", 1}};
    g.edge_labels = {{{0, 1}, {0, 1}}, {{1, 2}, {0, 1}}};
    CHECK(parse_labelled(serialize(g)) == g);
    CHECK(g.label_of(2, 1) == VertexPair{0, 1});
    CHECK(!g.label_of(0, 2).has_value());

    // plain coloured parser accepts labelled files
    CHECK(parse_coloured(serialize(g)) == g.graph);
}

TEST_CASE("dot export")
{
    LabelledColouredGraph g;
    g.graph = ColouredGraph(3, {{0, 1, 0}, {1, 2, 5}});
    auto dot = to_dot(g);
    CHECK(dot.find("0 -- 1 [label=\"0\"]") != std::string::npos);
    CHECK(dot.find("1 -- 2 [label=\"5\"]") != std::string::npos);
}

TEST_CASE("pattern components")
{
    PatternGraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    auto comps = g.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4});
    CHECK(comps[2] == std::vector<int>{5});
    CHECK(!g.is_connected());
    CHECK(g.induced(comps[0]).edge_count() == 3);
}

TEST_CASE("named patterns")
{
    CHECK(named_pattern("k3")->edge_count() == 3);
    CHECK(named_pattern("K5")->edge_count() == 10);
    CHECK(named_pattern("p4")->vertex_count() == 4);
    CHECK(named_pattern("c5")->edge_count() == 5);
    CHECK(named_pattern("paw")->min_degree() == 1);
    CHECK(named_pattern("diamond")->edge_count() == 5);
    CHECK(named_pattern("wheel4")->edge_count() == 8);
    CHECK(!named_pattern("nosuch").has_value());
    for (const auto& name : named_pattern_names())
        CHECK(named_pattern(name).has_value());
}
