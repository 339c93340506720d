#include "svcp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "svcp/errors.hpp"

namespace svcp {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) throw InvalidArgument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    const auto un = static_cast<std::size_t>(n);
    g.adj_.assign(un, {});
    g.matrix_.assign(un * un, 0);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InvalidArgument("edge endpoint out of range: " + std::to_string(a) + " " + std::to_string(b));
        if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
        auto& cell = g.matrix_[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)];
        if (cell != 0) throw InvalidArgument("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        cell = 1;
        g.matrix_[static_cast<std::size_t>(b) * un + static_cast<std::size_t>(a)] = 1;
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
        g.adj_[static_cast<std::size_t>(a)].push_back(b);
        g.adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    if (g.fits_vertex_set()) {
        g.masks_.assign(un, 0);
        for (const Edge& e : g.edges_) {
            g.masks_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
            g.masks_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
        }
    }
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
}

VertexSet Graph::neighbor_set(Vertex v) const {
    if (!fits_vertex_set()) throw InvalidArgument("graph too large for vertex-set operations");
    return VertexSet(masks_.at(static_cast<std::size_t>(v)));
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(static_cast<std::size_t>(n_ * n_), -1) {
    for (Vertex s = 0; s < n_; ++s) {
        int* row = &d_[static_cast<std::size_t>(s * n_)];
        std::queue<Vertex> q;
        row[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    q.push(w);
                }
            }
        }
    }
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int d : d_) {
        if (d < 0) throw DisconnectedGraph();
        best = std::max(best, d);
    }
    return best;
}

int diameter(const Graph& g) { return DistanceMatrix(g).diameter(); }

Graph make_path(int n) {
    if (n < 1) throw InvalidArgument("path needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph make_cycle(int n) {
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph make_complete(int n) {
    if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph make_star(int leaves) {
    if (leaves < 1) throw InvalidArgument("star needs at least one leaf");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    validate(FamilySpec::multipartite(parts));
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    const int n = static_cast<int>(part_of.size());
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)]) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph make_friendship(int triangles) {
    if (triangles < 1) throw InvalidArgument("friendship graph needs at least one triangle");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= triangles; ++i) {
        e.emplace_back(0, 2 * i - 1);
        e.emplace_back(0, 2 * i);
        e.emplace_back(2 * i - 1, 2 * i);
    }
    return Graph::from_edges(2 * triangles + 1, e);
}

Graph make_wheel(int rim) {
    if (rim < 3) throw InvalidArgument("wheel rim must be >= 3");
    return join(make_complete(1), make_cycle(rim));
}

namespace {

std::vector<std::pair<Vertex, Vertex>> shifted_edges(const Graph& g, int offset) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u + offset, e.v + offset);
    return out;
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    auto e = shifted_edges(g1, 0);
    auto e2 = shifted_edges(g2, g1.order());
    e.insert(e.end(), e2.begin(), e2.end());
    return Graph::from_edges(g1.order() + g2.order(), e);
}

Graph join(const Graph& g1, const Graph& g2) {
    auto e = shifted_edges(g1, 0);
    auto e2 = shifted_edges(g2, g1.order());
    e.insert(e.end(), e2.begin(), e2.end());
    for (int a = 0; a < g1.order(); ++a)
        for (int b = 0; b < g2.order(); ++b) e.emplace_back(a, g1.order() + b);
    return Graph::from_edges(g1.order() + g2.order(), e);
}

void validate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path:
            if (spec.n < 1) throw InvalidArgument("path: n must be >= 1");
            break;
        case Family::cycle:
            if (spec.n < 3) throw InvalidArgument("cycle: n must be >= 3");
            break;
        case Family::complete:
            if (spec.n < 1) throw InvalidArgument("complete: n must be >= 1");
            break;
        case Family::star:
            if (spec.n < 1) throw InvalidArgument("star: needs at least one leaf");
            break;
        case Family::complete_multipartite:
            if (spec.parts.empty()) throw InvalidArgument("complete_multipartite: parts must be non-empty");
            for (std::size_t i = 0; i < spec.parts.size(); ++i) {
                if (spec.parts[i] < 1) throw InvalidArgument("complete_multipartite: part sizes must be positive");
                if (i > 0 && spec.parts[i] > spec.parts[i - 1])
                    throw InvalidArgument("complete_multipartite: parts must be non-increasing");
            }
            break;
        case Family::friendship:
            if (spec.n < 1) throw InvalidArgument("friendship: needs at least one triangle");
            break;
        case Family::wheel:
            if (spec.n < 3) throw InvalidArgument("wheel: rim must be >= 3");
            break;
        case Family::join:
        case Family::union_:
            if (spec.operands.size() != 2) throw InvalidArgument(family_name(spec.family) + ": needs exactly two operands");
            validate(spec.operands[0]);
            validate(spec.operands[1]);
            break;
    }
}

Graph build(const FamilySpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::path: return make_path(spec.n);
        case Family::cycle: return make_cycle(spec.n);
        case Family::complete: return make_complete(spec.n);
        case Family::star: return make_star(spec.n);
        case Family::complete_multipartite: return make_complete_multipartite(spec.parts);
        case Family::friendship: return make_friendship(spec.n);
        case Family::wheel: return make_wheel(spec.n);
        case Family::join: return join(build(spec.operands[0]), build(spec.operands[1]));
        case Family::union_: return disjoint_union(build(spec.operands[0]), build(spec.operands[1]));
    }
    throw InvalidArgument("unknown family");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::complete_multipartite: return "multipartite";
        case Family::friendship: return "friendship";
        case Family::wheel: return "wheel";
        case Family::join: return "join";
        case Family::union_: return "union";
    }
    return "?";
}

Family parse_family_name(const std::string& name) {
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::star, Family::complete_multipartite,
                     Family::friendship, Family::wheel, Family::join, Family::union_}) {
        if (family_name(f) == name) return f;
    }
    if (name == "complete_multipartite") return Family::complete_multipartite;
    throw InvalidArgument("unknown family: " + name);
}

std::string describe(const FamilySpec& spec) {
    std::ostringstream os;
    switch (spec.family) {
        case Family::path: os << "P_" << spec.n; break;
        case Family::cycle: os << "C_" << spec.n; break;
        case Family::complete: os << "K_" << spec.n; break;
        case Family::star: os << "K_{1," << spec.n << "}"; break;
        case Family::complete_multipartite: {
            os << "K_{";
            for (std::size_t i = 0; i < spec.parts.size(); ++i) os << (i ? "," : "") << spec.parts[i];
            os << "}";
            break;
        }
        case Family::friendship: os << "F_" << spec.n; break;
        case Family::wheel: os << "W_" << spec.n; break;
        case Family::join: os << "(" << describe(spec.operands.at(0)) << " + " << describe(spec.operands.at(1)) << ")"; break;
        case Family::union_: os << "(" << describe(spec.operands.at(0)) << " u " << describe(spec.operands.at(1)) << ")"; break;
    }
    return os.str();
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    int declared_n = -1;
    int max_index = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::string body = line.substr(first);
        if (body.rfind("n=", 0) == 0) {
            if (declared_n >= 0 || !edges.empty())
                throw InvalidArgument("line " + std::to_string(line_no) + ": header n=<k> must come before edges");
            std::istringstream hs(body.substr(2));
            if (!(hs >> declared_n) || declared_n < 0) throw InvalidArgument("line " + std::to_string(line_no) + ": bad n=<k> header");
            continue;
        }
        std::istringstream ls(body);
        long long a = 0, b = 0;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra) || a < 0 || b < 0 || a > 1'000'000 || b > 1'000'000)
            throw InvalidArgument("line " + std::to_string(line_no) + ": expected two non-negative vertex indices");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        max_index = std::max({max_index, static_cast<int>(a), static_cast<int>(b)});
    }
    int n = declared_n >= 0 ? declared_n : max_index + 1;
    if (max_index >= n) throw InvalidArgument("edge references vertex " + std::to_string(max_index) + " but n=" + std::to_string(n));
    return Graph::from_edges(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open graph file: " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n=" << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 6) throw InvalidArgument("connected_graphs supports 1 <= n <= 6");
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> pair_index(static_cast<std::size_t>(n * n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pair_index[static_cast<std::size_t>(i * n + j)] = pair_index[static_cast<std::size_t>(j * n + i)] =
                static_cast<int>(pairs.size());
            pairs.emplace_back(i, j);
        }
    const int m = static_cast<int>(pairs.size());

    // Bit k of a mask maps to pairs[k]; for each permutation precompute where each bit lands.
    std::vector<std::vector<int>> moves;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> to(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            auto [a, b] = pairs[static_cast<std::size_t>(k)];
            to[static_cast<std::size_t>(k)] = pair_index[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)] * n + perm[static_cast<std::size_t>(b)])];
        }
        moves.push_back(std::move(to));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        if (std::popcount(mask) < n - 1) continue;
        bool canonical = true;
        for (const auto& to : moves) {
            std::uint32_t image = 0;
            for (int k = 0; k < m; ++k)
                if ((mask >> k) & 1U) image |= std::uint32_t{1} << to[static_cast<std::size_t>(k)];
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        std::vector<std::pair<Vertex, Vertex>> e;
        for (int k = 0; k < m; ++k)
            if ((mask >> k) & 1U) e.push_back(pairs[static_cast<std::size_t>(k)]);
        Graph g = Graph::from_edges(n, e);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace svcp
