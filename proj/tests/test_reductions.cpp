#include "doctest.h"
#include "svcp/covers.hpp"
#include "svcp/errors.hpp"
#include "svcp/reductions.hpp"

using namespace svcp;

TEST_CASE("clique layer construction") {
    auto inst = build_clique_layer(make_path(3));
    CHECK(inst.constructed.order() == 6);
    CHECK(inst.constructed.edge_count() == 2 + 3 + 3);
    CHECK(inst.constructed.adjacent(0, 3));
    CHECK(inst.constructed.adjacent(3, 5));
    CHECK(inst.copy_layer() == VertexSet{3, 4, 5});
}

TEST_CASE("apex construction") {
    auto inst = build_apex(make_path(3));
    CHECK(inst.apex == 0);
    CHECK(inst.constructed.degree(0) == 3);
    CHECK(inst.image == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("clique-layer correspondence on small graphs") {
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : connected_graphs(n)) {
            auto rep = verify_clique_layer_correspondence(g);
            CHECK(rep.holds());
            CHECK(rep.subsets_checked == (1 << n));
        }
    CHECK_THROWS_AS(verify_clique_layer_correspondence(make_path(9)), CapExceeded);
}

TEST_CASE("apex probe reports oracle and claimed counts") {
    auto p = probe_apex_pebble_counts(make_path(3), 2);
    CHECK(p.alpha_s_source == 2);
    CHECK(p.claimed == std::vector<int>{7, 8, 9});
    CHECK(p.alternate == 5);
    CHECK(p.oracle > 0);
    CHECK_THROWS_AS(probe_apex_pebble_counts(make_path(5), 2), InvalidArgument);
}
