#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include <mmcc/graph.hxx>
#include <mmcc/intersection_table.hxx>

#include "fixtures.hxx"

using namespace mmcc;

TEST_CASE("parse_edge_list builds a path")
{
    auto const parsed = parse_edge_list("0 1\n1 2");
    CHECK(parsed.graph.node_count() == 3);
    CHECK(parsed.graph.edge_count() == 2);
    CHECK(parsed.graph.max_degree() == 2);
    CHECK(parsed.graph.is_adjacent(0, 1));
    CHECK(parsed.graph.is_adjacent(1, 2));
    CHECK_FALSE(parsed.graph.is_adjacent(0, 2));
}

TEST_CASE("parse_edge_list drops self-loops, merges duplicates, relabels")
{
    auto const parsed = parse_edge_list("# c\n5 5\n5 7\n7 5");
    CHECK(parsed.graph.node_count() == 2);
    CHECK(parsed.graph.edge_count() == 1);
    CHECK(parsed.self_loops_dropped == 1);
    CHECK(parsed.duplicate_edges_merged == 1);
    REQUIRE(parsed.original_label.size() == 2);
    CHECK(parsed.original_label[0] == 5);
    CHECK(parsed.original_label[1] == 7);
    CHECK(parsed.internal_id.at(5) == 0);
    CHECK(parsed.internal_id.at(7) == 1);
}

TEST_CASE("parse_edge_list reports malformed lines with their number")
{
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n0 x"), doctest::Contains("line 2"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("7"), doctest::Contains("line 1"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("1 2 3"), doctest::Contains("line 1"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("-1 2"), doctest::Contains("malformed"),
                         std::runtime_error);
}

TEST_CASE("parse_edge_list accepts empty input and blank lines")
{
    CHECK(parse_edge_list("").graph.node_count() == 0);
    auto const parsed = parse_edge_list("\n  \n# only comments\n");
    CHECK(parsed.graph.node_count() == 0);
    CHECK(parsed.graph.edge_count() == 0);
}

TEST_CASE("closed neighborhoods")
{
    auto const g = fixtures::fan_triangle();
    CHECK(g.closed_neighborhood(4) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});

    auto const isolated = fixtures::edgeless(3);
    CHECK(isolated.closed_neighborhood(1) == std::vector<std::size_t>{1});

    auto const k3 = fixtures::triangle();
    for (std::size_t v = 0; v < 3; ++v)
        CHECK(k3.closed_neighborhood(v) == std::vector<std::size_t>{0, 1, 2});

    CHECK_THROWS_AS((void)g.closed_neighborhood(7), std::out_of_range);
}

TEST_CASE("graph constructor rejects bad edges")
{
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("intersection table on golden graphs")
{
    auto const g = fixtures::fan_triangle();
    auto const table = build_intersection_table(g);
    CHECK(table.intersection_size(5, 6) == 3);
    std::size_t max_off_diagonal = 0;
    for (std::size_t v = 1; v < g.node_count(); ++v)
        for (std::size_t u = 0; u < v; ++u)
            max_off_diagonal = std::max(max_off_diagonal, table.intersection_size(u, v));
    CHECK(max_off_diagonal == 3);
}

TEST_CASE("intersection table trivial cases")
{
    auto const k3 = fixtures::triangle();
    auto const t3 = build_intersection_table(k3);
    for (std::size_t v = 0; v < 3; ++v)
        for (std::size_t u = 0; u < 3; ++u)
            CHECK(t3.intersection_size(u, v) == 3);

    auto const empty2 = fixtures::edgeless(2);
    auto const t2 = build_intersection_table(empty2);
    CHECK(t2.intersection_size(0, 1) == 0);
    CHECK(t2.intersection_size(0, 0) == 1);
    CHECK(t2.intersection_size(1, 1) == 1);
}

TEST_CASE("intersection table refuses oversized graphs")
{
    auto const g = fixtures::edgeless(6);
    CHECK_THROWS_AS((void)build_intersection_table(g, 5), std::length_error);
}

TEST_CASE("intersection table matches the naive oracle on random graphs")
{
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        auto const g = fixtures::random_graph(size(rng), density(rng), rng);
        auto const table = build_intersection_table(g);
        for (std::size_t v = 0; v < g.node_count(); ++v)
            for (std::size_t u = 0; u <= v; ++u) {
                CHECK(table.intersection_size(u, v) == fixtures::naive_intersection(g, u, v));
                CHECK(table.symmetric_difference_size(u, v) ==
                      fixtures::naive_symmetric_difference(g, u, v));
            }
    }
}

TEST_CASE("edge list round-trip is label-stable")
{
    std::string const input = "17 3\n3 99\n99 17\n42 17\n";
    auto const first = parse_edge_list(input);

    std::ostringstream once;
    write_edge_list(once, first.graph, &first.original_label);
    auto const second = parse_edge_list(once.str());

    std::ostringstream twice;
    write_edge_list(twice, second.graph, &second.original_label);
    CHECK(once.str() == twice.str());

    // same original-label edge set
    CHECK(second.graph.node_count() == first.graph.node_count());
    CHECK(second.graph.edge_count() == first.graph.edge_count());
    for (std::size_t u = 0; u < first.graph.node_count(); ++u)
        for (std::size_t v : first.graph.neighbors(u)) {
            std::size_t const u2 = second.internal_id.at(first.original_label[u]);
            std::size_t const v2 = second.internal_id.at(first.original_label[v]);
            CHECK(second.graph.is_adjacent(u2, v2));
        }
}
