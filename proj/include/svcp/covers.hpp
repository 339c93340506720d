#pragma once

#include <string>
#include <vector>

#include "svcp/bigint.hpp"
#include "svcp/graph.hpp"
#include "svcp/vertex_set.hpp"

namespace svcp {

inline constexpr int kDefaultEnumerationCap = 24;

// A vertex subset together with its cover classification on one graph.
struct CoverSet {
    VertexSet members;
    bool is_vc = false;
    bool is_secure = false;
    bool is_minimal_secure = false;

    friend bool operator==(const CoverSet&, const CoverSet&) = default;
};

bool is_vertex_cover(const Graph& g, VertexSet s);

// S is a vertex cover and every u outside S has a neighbour v in S such that
// (S \ {v}) + {u} is still a vertex cover.
bool is_secure_vertex_cover(const Graph& g, VertexSet s);

CoverSet classify(const Graph& g, VertexSet s);

// Ordered by size, then lexicographically on the sorted member list.
std::vector<CoverSet> enumerate_secure_covers(const Graph& g, bool minimal_only,
                                              int cap = kDefaultEnumerationCap);
std::vector<VertexSet> minimal_secure_covers(const Graph& g, int cap = kDefaultEnumerationCap);
std::vector<VertexSet> minimal_vertex_covers(const Graph& g, int cap = kDefaultEnumerationCap);

int alpha_s(const Graph& g, int cap = kDefaultEnumerationCap);

// ---- path machinery (P_n with vertices v_1..v_n stored at 0..n-1) -----------

// The canonical minimum-weight secure cover S_n of P_n, n >= 2.
VertexSet path_canonical_cover(int n);

// Sum of 2^i over members i (0-based), i.e. the stack-on-v_1 cost on a path.
BigInt weight(VertexSet s);

// v_i in S' iff v_{i+1} in S.
VertexSet shift(VertexSet s);

// v_i in S^- iff v_{n+1-i} in S.
VertexSet reverse(VertexSet s, int n);

// ---- presentation ----------------------------------------------------------

std::vector<int> one_based(VertexSet s);
// Concatenated 1-based labels, e.g. {0,1,3,4} -> "1245". Labels above 9 are
// separated by commas to stay unambiguous.
std::string label(VertexSet s);

}  // namespace svcp
