#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "svcp/cli.hpp"
#include "svcp/graph.hpp"

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = svcp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parsed(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST_CASE("secure-covers lists the P_6 covers") {
    auto o = call({"secure-covers", "--family", "path", "--n", "6", "--minimal"});
    REQUIRE(o.code == 0);
    CHECK(parsed(o)["labels"] == nlohmann::json({"1245", "1246", "1345", "1346", "1356", "2345", "2346", "2356"}));
}

TEST_CASE("alpha-s and svcp") {
    CHECK(parsed(call({"alpha-s", "--family", "friendship", "--n", "3"}))["alpha_s"] == 4);
    auto o = call({"svcp", "--family", "complete", "--n", "4"});
    REQUIRE(o.code == 0);
    auto j = parsed(o);
    CHECK(j["value"] == 5);
    CHECK(j["witness"].size() == 4);
    CHECK_FALSE(j["stats"].contains("wall_seconds"));
    CHECK(parsed(call({"gamma", "--family", "path", "--n", "3", "--timing"}))["stats"].contains("wall_seconds"));
    CHECK(parsed(call({"sigma", "--family", "star", "--n", "3"}))["value"] == 3);
}

TEST_CASE("solvable with explicit and family targets") {
    auto yes = parsed(call({"solvable", "--family", "path", "--n", "6", "--dist", "0:27", "--target", "0,1,3,4"}));
    CHECK(yes["reachable"] == true);
    auto no = parsed(call({"solvable", "--family", "path", "--n", "6", "--dist", "0:26", "--target", "0,1,3,4"}));
    CHECK(no["reachable"] == false);
    auto sec = parsed(call({"solvable", "--family", "path", "--n", "6", "--dist", "[0,0,26,0,0,0]",
                            "--target-family", "secure", "--monotonicity-trials", "20"}));
    CHECK(sec["reachable"] == true);
    CHECK(sec["monotonicity"]["violations"] == 0);
}

TEST_CASE("family-table csv with oracle") {
    auto o = call({"family-table", "--family", "complete", "--n", "2..4", "--oracle", "--format", "csv"});
    CHECK(o.code == 0);
    std::istringstream lines(o.out);
    std::string header, row;
    std::getline(lines, header);
    CHECK(header == "family,parameters,formula,value,oracle,match,note");
    int rows = 0;
    while (std::getline(lines, row)) {
        CHECK(row.find(",true,") != std::string::npos);
        ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("wn range") {
    auto j = parsed(call({"wn", "--n", "5..6"}));
    CHECK(j[0]["w_n"] == "13");
    CHECK(j[1]["w_n"] == "27");
    CHECK(j[1]["S_n"] == nlohmann::json({1, 2, 4, 5}));
}

TEST_CASE("reduce output round-trips through the edge-list reader") {
    auto o = call({"reduce", "clique-layer", "--family", "path", "--n", "3", "--format", "plain"});
    REQUIRE(o.code == 0);
    svcp::Graph g = svcp::parse_edge_list(o.out);
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 8);
    const std::string path = "cli_test_graph.txt";
    CHECK(call({"reduce", "apex", "--family", "path", "--n", "3", "--out", path}).code == 0);
    CHECK(svcp::read_edge_list_file(path).order() == 4);
    CHECK(parsed(call({"alpha-s", "--graph", path}))["alpha_s"] == 3);
    std::remove(path.c_str());
}

TEST_CASE("checked properties set the exit code") {
    CHECK(call({"sandwich", "--family", "path", "--n", "4"}).code == 0);
    CHECK(call({"sandwich", "--family", "star", "--n", "3"}).code == 1);
    CHECK(call({"verify-reduction", "--corpus", "3"}).code == 0);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"svcp"}).code == 2);
    CHECK(call({"svcp", "--family", "hypercube", "--n", "3"}).code == 2);
    CHECK(call({"svcp", "--family", "path", "--n", "3", "--format", "csv"}).code == 2);
    CHECK(call({"svcp", "--family", "path", "--n", "6", "--cap-distributions", "100"}).code == 2);
    CHECK(call({"solvable", "--family", "path", "--n", "3", "--dist", "0:1"}).code == 2);
    CHECK(call({"svcp", "--graph", "/nonexistent/graph.txt"}).code == 2);
    CHECK(call({"svcp", "--family", "path", "--n", "3"}).code == 0);
}
