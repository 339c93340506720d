#include "svcp/reductions.hpp"

#include <algorithm>

#include "svcp/covers.hpp"
#include "svcp/errors.hpp"

namespace svcp {

VertexSet ReductionInstance::copy_layer() const {
    VertexSet s;
    for (Vertex v : copy) s.insert(v);
    return s;
}

ReductionInstance build_clique_layer(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<Vertex, Vertex>> e;
    for (const Edge& x : g.edges()) e.emplace_back(x.u, x.v);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(n + i, n + j);
    for (int v = 0; v < n; ++v) e.emplace_back(v, n + v);

    ReductionInstance r;
    r.kind = ReductionKind::clique_layer;
    r.source = g;
    r.constructed = Graph::from_edges(2 * n, e);
    for (int v = 0; v < n; ++v) {
        r.image.push_back(v);
        r.copy.push_back(n + v);
    }
    return r;
}

ReductionInstance build_apex(const Graph& g) {
    ReductionInstance r;
    r.kind = ReductionKind::apex;
    r.source = g;
    r.constructed = join(make_complete(1), g);
    r.apex = 0;
    for (int v = 0; v < g.order(); ++v) r.image.push_back(v + 1);
    return r;
}

CorrespondenceReport verify_clique_layer_correspondence(const Graph& g) {
    if (g.order() > kMaxCorrespondenceVertices)
        throw CapExceeded("clique-layer verification is exhaustive and limited to " +
                          std::to_string(kMaxCorrespondenceVertices) + " vertices");
    const ReductionInstance inst = build_clique_layer(g);
    const VertexSet copies = inst.copy_layer();
    CorrespondenceReport rep;
    const std::uint64_t total = std::uint64_t{1} << g.order();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const VertexSet s(bits);
        const bool vc = is_vertex_cover(g, s);
        const bool lifted = is_secure_vertex_cover(inst.constructed, s | copies);
        ++rep.subsets_checked;
        if (vc != lifted) rep.violations.push_back({s, vc, lifted});
    }
    return rep;
}

ApexProbe probe_apex_pebble_counts(const Graph& g, int k, const SolverOptions& opts) {
    if (k < 1) throw InvalidArgument("probe-apex needs k >= 1");
    ApexProbe p;
    p.k = k;
    p.alpha_s_source = alpha_s(g, opts.enumeration_cap);
    if (p.alpha_s_source > k)
        throw InvalidArgument("source graph has no secure vertex cover of size <= k (alpha_s = " +
                              std::to_string(p.alpha_s_source) + ")");
    const ReductionInstance inst = build_apex(g);
    p.oracle = compute_f_svcp(inst.constructed, opts).value;
    for (int l = 1; l <= 3; ++l) p.claimed.push_back(l + 4 * (k - 1) + 2);
    p.alternate = 3 + 4 * (k - 2) + 2;
    p.in_claimed_window = std::find(p.claimed.begin(), p.claimed.end(), p.oracle) != p.claimed.end();
    p.matches_alternate = p.oracle == p.alternate;
    return p;
}

}  // namespace svcp
