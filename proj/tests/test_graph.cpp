#include <sstream>

#include "doctest.h"
#include "svcp/errors.hpp"
#include "svcp/graph.hpp"

using namespace svcp;

TEST_CASE("from_edges normalizes and rejects bad input") {
    Graph g = Graph::from_edges(3, {{2, 0}, {1, 0}});
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges().front() == Edge{0, 1});
    CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2});
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), InvalidArgument);
}

TEST_CASE("distances and diameter") {
    CHECK(diameter(make_path(6)) == 5);
    CHECK(diameter(make_complete(4)) == 1);
    CHECK(diameter(make_complete(1)) == 0);
    CHECK(diameter(make_wheel(6)) == 2);
    CHECK(diameter(make_cycle(7)) == 3);
    DistanceMatrix d(make_path(4));
    CHECK(d(0, 3) == 3);
    CHECK(d(2, 1) == 1);
    Graph two = Graph::from_edges(2, {});
    CHECK_FALSE(two.is_connected());
    CHECK_THROWS_AS(diameter(two), DisconnectedGraph);
}

TEST_CASE("family generators have the expected shape") {
    CHECK(make_path(5).edge_count() == 4);
    CHECK(make_cycle(5).edge_count() == 5);
    CHECK(make_complete(5).edge_count() == 10);
    Graph star = make_star(4);
    CHECK(star.order() == 5);
    CHECK(star.degree(0) == 4);
    Graph k221 = make_complete_multipartite({2, 2, 1});
    CHECK(k221.order() == 5);
    CHECK(k221.edge_count() == 8);
    CHECK_FALSE(k221.adjacent(0, 1));
    CHECK(k221.adjacent(0, 2));
    Graph f3 = make_friendship(3);
    CHECK(f3.order() == 7);
    CHECK(f3.edge_count() == 9);
    CHECK(f3.adjacent(5, 6));
    CHECK_FALSE(f3.adjacent(2, 3));
    Graph w5 = make_wheel(5);
    CHECK(w5.order() == 6);
    CHECK(w5.edge_count() == 10);
    CHECK(w5.degree(0) == 5);
    CHECK(make_wheel(3) == make_complete(4));
    CHECK_THROWS_AS(make_complete_multipartite({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(make_cycle(2), InvalidArgument);
}

TEST_CASE("join and disjoint union") {
    Graph j = join(make_complete(1), make_path(3));
    CHECK(j.order() == 4);
    CHECK(j.edge_count() == 5);
    CHECK(j.adjacent(0, 3));
    Graph u = disjoint_union(make_complete(2), make_complete(2));
    CHECK(u.edge_count() == 2);
    CHECK(u.adjacent(2, 3));
    CHECK_FALSE(u.is_connected());
}

TEST_CASE("family specs build, describe and validate") {
    CHECK(describe(FamilySpec::wheel(5)) == "W_5");
    CHECK(describe(FamilySpec::multipartite({2, 2})) == "K_{2,2}");
    CHECK(build(FamilySpec::join_of(FamilySpec::complete(2), FamilySpec::complete(3))) == make_complete(5));
    CHECK(FamilySpec::wheel(13).wheel_s() == 2);
    CHECK(FamilySpec::wheel(13).wheel_l() == 3);
    CHECK(parse_family_name("multipartite") == Family::complete_multipartite);
    CHECK_THROWS_AS(parse_family_name("hypercube"), InvalidArgument);
    CHECK_THROWS_AS(validate(FamilySpec::path(0)), InvalidArgument);
}

TEST_CASE("edge-list format round-trips") {
    Graph g = make_friendship(2);
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(parse_edge_list(out.str()) == g);
    Graph h = parse_edge_list("# comment\nn=4\n0 1\n\n1 2\n");
    CHECK(h.order() == 4);
    CHECK(h.edge_count() == 2);
    CHECK(parse_edge_list("0 1\n1 2\n").order() == 3);
    CHECK_THROWS_AS(parse_edge_list("0 1\nn=3\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), InvalidArgument);
}

TEST_CASE("connected graph corpus counts isomorphism classes") {
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        auto graphs = connected_graphs(n);
        CHECK(graphs.size() == expected[static_cast<std::size_t>(n - 1)]);
        for (const Graph& g : graphs) CHECK(g.is_connected());
    }
}
