#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "svcp/vertex_set.hpp"

namespace svcp {

struct Edge {
    Vertex u;
    Vertex v;  // u < v
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built, so a
// single instance can be shared by any number of search workers.
class Graph {
public:
    Graph() = default;

    // Rejects loops, duplicate edges and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    // Neighborhood as a bitmask; only for graphs with at most 64 vertices.
    VertexSet neighbor_set(Vertex v) const;
    bool fits_vertex_set() const { return n_ <= VertexSet::kMaxSetVertices; }
    VertexSet vertex_set() const { return VertexSet::full(n_); }

    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::uint64_t> masks_;
};

// All-pairs BFS distances; -1 marks unreachable pairs.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);
    int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u * n_ + v)]; }
    int order() const { return n_; }
    // Largest finite distance; throws DisconnectedGraph if any pair is unreachable.
    int diameter() const;

private:
    int n_;
    std::vector<int> d_;
};

int diameter(const Graph& g);

// ---- generators ---------------------------------------------------------
// Hubs and apexes sit at index 0; paths and cycles run 0-1-2-...

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
// K_{1,leaves}: centre 0, leaves 1..leaves.
Graph make_star(int leaves);
// Parts must be non-empty and non-increasing; vertices are assigned to parts
// consecutively in the order given.
Graph make_complete_multipartite(const std::vector<int>& parts);
// Apex 0; triangle i (1-based) is {0, 2i-1, 2i}.
Graph make_friendship(int triangles);
// Hub 0; rim 1..rim in cycle order.
Graph make_wheel(int rim);

// Vertices of g1 keep their labels; g2's are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

// ---- family specs ---------------------------------------------------------

enum class Family { path, cycle, complete, star, complete_multipartite, friendship, wheel, join, union_ };

struct FamilySpec {
    Family family = Family::path;
    int n = 0;               // path/cycle/complete order, star leaves, friendship triangles, wheel rim
    std::vector<int> parts;  // complete_multipartite
    std::vector<FamilySpec> operands;  // join / union_

    static FamilySpec path(int n) { return {Family::path, n, {}, {}}; }
    static FamilySpec cycle(int n) { return {Family::cycle, n, {}, {}}; }
    static FamilySpec complete(int n) { return {Family::complete, n, {}, {}}; }
    static FamilySpec star(int leaves) { return {Family::star, leaves, {}, {}}; }
    static FamilySpec multipartite(std::vector<int> parts) { return {Family::complete_multipartite, 0, std::move(parts), {}}; }
    static FamilySpec friendship(int triangles) { return {Family::friendship, triangles, {}, {}}; }
    static FamilySpec wheel(int rim) { return {Family::wheel, rim, {}, {}}; }
    static FamilySpec join_of(FamilySpec a, FamilySpec b) { return {Family::join, 0, {}, {std::move(a), std::move(b)}}; }
    static FamilySpec union_of(FamilySpec a, FamilySpec b) { return {Family::union_, 0, {}, {std::move(a), std::move(b)}}; }

    // Wheel rim written as 5s + l.
    int wheel_s() const { return n / 5; }
    int wheel_l() const { return n % 5; }
};

// Throws InvalidArgument naming the violated constraint.
void validate(const FamilySpec& spec);
Graph build(const FamilySpec& spec);
std::string describe(const FamilySpec& spec);
std::string family_name(Family f);
Family parse_family_name(const std::string& name);

// ---- edge-list text format ---------------------------------------------------
// '#' comment lines, optional "n=<k>" header, then one "u v" pair per line.

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// ---- corpus ------------------------------------------------------------------

// One representative per isomorphism class of connected graphs on n vertices
// (1 <= n <= 6), each relabelled to its canonical (lexicographically smallest
// adjacency bitstring) form. Order is deterministic.
std::vector<Graph> connected_graphs(int n);

}  // namespace svcp
