#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svcp/graph.hpp"
#include "svcp/vertex_set.hpp"

namespace svcp {

// Pebble counts indexed by vertex.
class Distribution {
public:
    Distribution() = default;
    explicit Distribution(std::vector<int> counts);

    static Distribution zeros(int n) { return Distribution(std::vector<int>(static_cast<std::size_t>(n), 0)); }
    static Distribution stacked(int n, Vertex v, int pebbles);

    int order() const { return static_cast<int>(counts_.size()); }
    int total() const { return total_; }
    int operator[](Vertex v) const { return counts_.at(static_cast<std::size_t>(v)); }
    std::span<const int> counts() const { return counts_; }
    VertexSet support() const;

    void add(Vertex v, int pebbles);
    // Pointwise >=.
    bool dominates(const Distribution& other) const;

    friend bool operator==(const Distribution& a, const Distribution& b) { return a.counts_ == b.counts_; }

private:
    std::vector<int> counts_;
    int total_ = 0;
};

struct Move {
    Vertex from;
    Vertex to;
    friend bool operator==(const Move&, const Move&) = default;
};

// Each move takes two pebbles off `from` and puts one on the adjacent `to`.
struct MoveCertificate {
    std::vector<Move> moves;

    // Throws InvalidArgument on the first illegal move.
    Distribution replay(const Graph& g, const Distribution& start) const;
    bool reaches(const Graph& g, const Distribution& start, VertexSet target) const;
};

Distribution apply_move(const Graph& g, const Distribution& d, Vertex from, Vertex to);

struct ReachResult {
    bool reachable = false;
    std::optional<MoveCertificate> certificate;
};

struct ReachAnyResult {
    bool reachable = false;
    std::optional<std::size_t> target_index;  // position in the caller's target list
    std::optional<MoveCertificate> certificate;
};

struct EngineOptions {
    // 0 = unlimited; otherwise a single query throws CapExceeded after
    // expanding this many states.
    std::uint64_t max_states = 0;
    bool want_certificate = true;
};

// Exact reachability by depth-first search over distributions. The memo of
// failed states is private to each query; an engine instance must not be used
// from two threads at once, but independent engines may run in parallel.
class ReachabilityEngine {
public:
    explicit ReachabilityEngine(const Graph& g, EngineOptions options = {});

    ReachResult reach_set(const Distribution& d, VertexSet target);
    ReachAnyResult reach_any(const Distribution& d, std::span<const VertexSet> targets);

    // States expanded by the most recent query.
    std::uint64_t last_states() const { return last_states_; }
    const Graph& graph() const { return g_; }

private:
    struct Query;

    Graph g_;
    EngineOptions options_;
    int n_;
    DistanceMatrix dist_;
    bool use_potential_ = true;
    // weight_[r * n + v] = 2^(diam - d(v, r))
    std::vector<std::uint64_t> weight_;
    std::uint64_t last_states_ = 0;
};

ReachResult can_reach_set(const Graph& g, const Distribution& d, VertexSet target);
ReachAnyResult can_reach_any(const Graph& g, const Distribution& d, std::span<const VertexSet> targets);

// "0:27,3:1" (0-based vertex:count pairs) or a JSON integer array "[27,0,0]".
Distribution parse_distribution(const std::string& text, int n);
std::string format_distribution(const Distribution& d);

}  // namespace svcp
