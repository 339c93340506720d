#include "svcp/covers.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "svcp/errors.hpp"

namespace svcp {

namespace {

void require_subset(const Graph& g, VertexSet s) {
    if (!g.fits_vertex_set()) throw InvalidArgument("graph too large for vertex-set operations");
    if (!s.is_subset_of(g.vertex_set())) throw InvalidArgument("vertex set references a vertex outside the graph");
}

// Every vertex outside S must have its whole neighbourhood inside S.
bool covers_all_edges(const Graph& g, std::uint64_t s) {
    std::uint64_t outside = g.vertex_set().bits() & ~s;
    for (; outside != 0; outside &= outside - 1) {
        Vertex v = std::countr_zero(outside);
        if ((g.neighbor_set(v).bits() & ~s) != 0) return false;
    }
    return true;
}

// Given a cover S, swapping v out for u keeps it a cover exactly when the only
// neighbour of v outside S is u.
bool secure_given_cover(const Graph& g, std::uint64_t s) {
    std::uint64_t outside = g.vertex_set().bits() & ~s;
    for (; outside != 0; outside &= outside - 1) {
        Vertex u = std::countr_zero(outside);
        const std::uint64_t ubit = std::uint64_t{1} << u;
        bool ok = false;
        for (std::uint64_t cand = g.neighbor_set(u).bits() & s; cand != 0 && !ok; cand &= cand - 1) {
            Vertex v = std::countr_zero(cand);
            ok = (g.neighbor_set(v).bits() & ~s) == ubit;
        }
        if (!ok) return false;
    }
    return true;
}

void check_cap(const Graph& g, int cap) {
    if (cap > 30) cap = 30;
    if (g.order() > cap)
        throw CapExceeded("subset enumeration on " + std::to_string(g.order()) + " vertices exceeds cap of " +
                          std::to_string(cap));
}

// Both cover families are closed under supersets, so a member is minimal iff
// no single-vertex removal stays in the family.
std::vector<VertexSet> enumerate_family(const Graph& g, int cap, bool minimal_only,
                                        const std::function<bool(std::uint64_t)>& in_family) {
    check_cap(g, cap);
    const std::uint64_t total = std::uint64_t{1} << g.order();
    std::vector<std::uint8_t> member(total, 0);
    for (std::uint64_t s = 0; s < total; ++s) member[s] = in_family(s) ? 1 : 0;
    std::vector<VertexSet> out;
    for (std::uint64_t s = 0; s < total; ++s) {
        if (!member[s]) continue;
        if (minimal_only) {
            bool minimal = true;
            for (std::uint64_t b = s; b != 0 && minimal; b &= b - 1)
                if (member[s & ~(b & -b)]) minimal = false;
            if (!minimal) continue;
        }
        out.emplace_back(s);
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return VertexSet::lex_less(a, b);
    });
    return out;
}

}  // namespace

bool is_vertex_cover(const Graph& g, VertexSet s) {
    require_subset(g, s);
    return covers_all_edges(g, s.bits());
}

bool is_secure_vertex_cover(const Graph& g, VertexSet s) {
    require_subset(g, s);
    return covers_all_edges(g, s.bits()) && secure_given_cover(g, s.bits());
}

CoverSet classify(const Graph& g, VertexSet s) {
    CoverSet c;
    c.members = s;
    c.is_vc = is_vertex_cover(g, s);
    c.is_secure = c.is_vc && secure_given_cover(g, s.bits());
    if (c.is_secure) {
        c.is_minimal_secure = true;
        for (Vertex v : s.to_vector())
            if (is_secure_vertex_cover(g, s.without(v))) c.is_minimal_secure = false;
    }
    return c;
}

std::vector<CoverSet> enumerate_secure_covers(const Graph& g, bool minimal_only, int cap) {
    auto sets = enumerate_family(g, cap, minimal_only,
                                 [&](std::uint64_t s) { return covers_all_edges(g, s) && secure_given_cover(g, s); });
    std::vector<CoverSet> out;
    out.reserve(sets.size());
    for (VertexSet s : sets) out.push_back(classify(g, s));
    return out;
}

std::vector<VertexSet> minimal_secure_covers(const Graph& g, int cap) {
    return enumerate_family(g, cap, true,
                            [&](std::uint64_t s) { return covers_all_edges(g, s) && secure_given_cover(g, s); });
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g, int cap) {
    return enumerate_family(g, cap, true, [&](std::uint64_t s) { return covers_all_edges(g, s); });
}

int alpha_s(const Graph& g, int cap) {
    auto covers = minimal_secure_covers(g, cap);
    if (covers.empty()) throw InvalidArgument("graph has no secure vertex cover");
    return covers.front().size();
}

VertexSet path_canonical_cover(int n) {
    if (n < 2) throw InvalidArgument("S_n is defined for n >= 2");
    if (n > VertexSet::kMaxSetVertices) throw InvalidArgument("S_n is limited to n <= 64");
    // 1-based membership, translated to 0-based at the end.
    std::vector<char> in(static_cast<std::size_t>(n + 1), 0);
    in[static_cast<std::size_t>(n - 1)] = 1;
    if (n >= 3) in[static_cast<std::size_t>(n - 2)] = 1;
    if (n >= 5) in[static_cast<std::size_t>(n - 4)] = 1;
    if (n >= 6) {
        for (int k = n - 5; k >= 2; --k) in[static_cast<std::size_t>(k)] = in[static_cast<std::size_t>(k + 5)];
        in[1] = (n % 5 != 4) ? 1 : 0;
    }
    VertexSet s;
    for (int i = 1; i <= n; ++i)
        if (in[static_cast<std::size_t>(i)]) s.insert(i - 1);
    return s;
}

BigInt weight(VertexSet s) {
    BigInt w = 0;
    for (Vertex v : s.to_vector()) w += BigInt(1) << v;
    return w;
}

VertexSet shift(VertexSet s) { return VertexSet(s.bits() >> 1); }

VertexSet reverse(VertexSet s, int n) {
    if (n < 0 || n > VertexSet::kMaxSetVertices) throw InvalidArgument("reverse: n out of range");
    if (s.span() > n) throw InvalidArgument("reverse: set is not inside P_n");
    VertexSet out;
    for (Vertex v : s.to_vector()) out.insert(n - 1 - v);
    return out;
}

std::vector<int> one_based(VertexSet s) {
    auto v = s.to_vector();
    for (auto& x : v) ++x;
    return v;
}

std::string label(VertexSet s) {
    const bool wide = s.span() > 9;
    std::string out;
    for (int x : one_based(s)) {
        if (wide && !out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

}  // namespace svcp
