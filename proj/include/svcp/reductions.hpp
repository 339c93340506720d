#pragma once

#include <vector>

#include "svcp/graph.hpp"
#include "svcp/solver.hpp"
#include "svcp/vertex_set.hpp"

namespace svcp {

enum class ReductionKind { clique_layer, apex };

struct ReductionInstance {
    ReductionKind kind = ReductionKind::clique_layer;
    Graph source;
    Graph constructed;
    // image[v]: where source vertex v lives in the constructed graph.
    std::vector<Vertex> image;
    // clique_layer only: copy[v] is v's partner in the clique layer.
    std::vector<Vertex> copy;
    // apex only.
    Vertex apex = -1;

    VertexSet copy_layer() const;
};

// G plus a clique on copies V' and the matching v -- v'. Source vertices keep
// their labels, v' = n + v.
ReductionInstance build_clique_layer(const Graph& g);

// K_1 + G with the apex at 0 and source vertices shifted by one, so that
// build_apex(C_n) is exactly make_wheel(n).
ReductionInstance build_apex(const Graph& g);

struct CorrespondenceViolation {
    VertexSet subset;
    bool is_vertex_cover = false;
    bool lifted_is_secure = false;
};

struct CorrespondenceReport {
    int subsets_checked = 0;
    std::vector<CorrespondenceViolation> violations;
    bool holds() const { return violations.empty(); }
};

inline constexpr int kMaxCorrespondenceVertices = 8;

// For every S of V(G): S covers G  <=>  S u V' is a secure cover of G*.
CorrespondenceReport verify_clique_layer_correspondence(const Graph& g);

struct ApexProbe {
    int k = 0;
    int alpha_s_source = 0;
    int oracle = 0;  // brute-force f_svcp(G*)
    std::vector<int> claimed;      // l + 4(k-1) + 2 for l = 1, 2, 3
    int alternate = 0;             // 3 + 4(k-2) + 2, the third case as printed
    bool in_claimed_window = false;
    bool matches_alternate = false;
};

// Exploratory: reports where the oracle value of f_svcp(K_1 + G) falls
// relative to the claimed windows. Nothing is asserted.
ApexProbe probe_apex_pebble_counts(const Graph& g, int k, const SolverOptions& opts = {});

}  // namespace svcp
