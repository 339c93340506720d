#include "svcp/pebbling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "svcp/errors.hpp"

namespace svcp {

Distribution::Distribution(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
        if (c < 0) throw InvalidArgument("pebble counts must be non-negative");
        total_ += c;
    }
}

Distribution Distribution::stacked(int n, Vertex v, int pebbles) {
    Distribution d = zeros(n);
    d.add(v, pebbles);
    return d;
}

VertexSet Distribution::support() const {
    VertexSet s;
    for (std::size_t v = 0; v < counts_.size(); ++v)
        if (counts_[v] > 0) s.insert(static_cast<Vertex>(v));
    return s;
}

void Distribution::add(Vertex v, int pebbles) {
    auto& c = counts_.at(static_cast<std::size_t>(v));
    if (c + pebbles < 0) throw InvalidArgument("pebble count would become negative");
    c += pebbles;
    total_ += pebbles;
}

bool Distribution::dominates(const Distribution& other) const {
    if (other.order() != order()) return false;
    for (std::size_t v = 0; v < counts_.size(); ++v)
        if (counts_[v] < other.counts_[v]) return false;
    return true;
}

Distribution apply_move(const Graph& g, const Distribution& d, Vertex from, Vertex to) {
    if (d.order() != g.order()) throw InvalidArgument("distribution does not match graph order");
    if (!g.adjacent(from, to))
        throw InvalidArgument("pebbling move between non-adjacent vertices " + std::to_string(from) + " -> " +
                              std::to_string(to));
    if (d[from] < 2) throw InvalidArgument("pebbling move needs two pebbles on vertex " + std::to_string(from));
    Distribution out = d;
    out.add(from, -2);
    out.add(to, 1);
    return out;
}

Distribution MoveCertificate::replay(const Graph& g, const Distribution& start) const {
    Distribution d = start;
    for (const Move& m : moves) d = apply_move(g, d, m.from, m.to);
    return d;
}

bool MoveCertificate::reaches(const Graph& g, const Distribution& start, VertexSet target) const {
    try {
        return target.is_subset_of(replay(g, start).support());
    } catch (const InvalidArgument&) {
        return false;
    }
}

// ---------------------------------------------------------------------------

namespace {

// Visited-state memo keyed by the exact counts vector. Packs the vector into a
// single word when every count fits in `bits` bits.
class StateMemo {
public:
    StateMemo(int n, int max_count) {
        bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(max_count))));
        packed_ = n * bits_ <= 64;
    }

    // True when the state was not seen before.
    bool insert(const std::vector<int>& counts) {
        if (packed_) {
            std::uint64_t key = 0;
            for (int c : counts) key = (key << bits_) | static_cast<std::uint64_t>(c);
            return packed_set_.insert(key).second;
        }
        std::string key(reinterpret_cast<const char*>(counts.data()), counts.size() * sizeof(int));
        return wide_set_.insert(std::move(key)).second;
    }

private:
    int bits_;
    bool packed_;
    std::unordered_set<std::uint64_t> packed_set_;
    std::unordered_set<std::string> wide_set_;
};

}  // namespace

struct ReachabilityEngine::Query {
    const ReachabilityEngine& eng;
    std::span<const VertexSet> targets;
    // need_[t * n + r] = sum over target t's vertices x of 2^(diam - d(x, r))
    std::vector<std::uint64_t> need;
    std::vector<int> counts;
    std::vector<Move> path;
    StateMemo memo;
    bool potential;
    std::uint64_t expanded = 0;
    std::size_t hit = 0;
    std::vector<int> nearest;  // scratch: distance to closest pebbled vertex

    Query(const ReachabilityEngine& e, const Distribution& d, std::span<const VertexSet> ts)
        : eng(e), targets(ts), counts(d.counts().begin(), d.counts().end()), memo(e.n_, d.total()),
          potential(e.use_potential_ && d.total() <= (1 << 28)), nearest(static_cast<std::size_t>(e.n_)) {
        const int n = eng.n_;
        if (potential) {
            need.assign(targets.size() * static_cast<std::size_t>(n), 0);
            for (std::size_t t = 0; t < targets.size(); ++t)
                for (Vertex x : targets[t].to_vector())
                    for (int r = 0; r < n; ++r) need[t * static_cast<std::size_t>(n) + static_cast<std::size_t>(r)] += eng.weight_[static_cast<std::size_t>(r * n + x)];
        }
    }

    std::uint64_t support_bits() const {
        std::uint64_t s = 0;
        for (std::size_t v = 0; v < counts.size(); ++v)
            if (counts[v] > 0) s |= std::uint64_t{1} << v;
        return s;
    }

    // A target stays reachable only if, for every vertex r, the potential
    // sum_v counts[v] 2^-d(v,r) (never increased by a move) still covers the
    // potential of one pebble on each target vertex.
    bool feasible(std::size_t t, int total) const {
        if (total < targets[t].size()) return false;
        if (!potential) return true;
        const int n = eng.n_;
        for (int r = 0; r < n; ++r) {
            std::uint64_t phi = 0;
            const std::uint64_t* w = &eng.weight_[static_cast<std::size_t>(r * n)];
            for (int v = 0; v < n; ++v) phi += static_cast<std::uint64_t>(counts[static_cast<std::size_t>(v)]) * w[v];
            if (phi < need[t * static_cast<std::size_t>(n) + static_cast<std::size_t>(r)]) return false;
        }
        return true;
    }

    bool search(int total) {
        const std::uint64_t supp = support_bits();
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if ((targets[t].bits() & ~supp) == 0) {
                hit = t;
                return true;
            }
        }
        if (!memo.insert(counts)) return false;
        ++expanded;
        if (eng.options_.max_states != 0 && expanded > eng.options_.max_states)
            throw CapExceeded("reachability search exceeded " + std::to_string(eng.options_.max_states) + " states");

        // Focus on the cheapest live target: sum of 2^(distance to nearest pebble)
        // over its unpebbled vertices.
        const int n = eng.n_;
        for (int v = 0; v < n; ++v) {
            int best = std::numeric_limits<int>::max();
            for (std::uint64_t b = supp; b != 0; b &= b - 1) best = std::min(best, eng.dist_(v, std::countr_zero(b)));
            nearest[static_cast<std::size_t>(v)] = best;
        }
        std::uint64_t focus = 0;
        bool any_live = false;
        double best_cost = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (!feasible(t, total)) continue;
            any_live = true;
            double cost = 0;
            for (std::uint64_t b = targets[t].bits() & ~supp; b != 0; b &= b - 1)
                cost += std::ldexp(1.0, nearest[static_cast<std::size_t>(std::countr_zero(b))]);
            if (cost < best_cost) {
                best_cost = cost;
                focus = targets[t].bits();
            }
        }
        if (!any_live) return false;

        const std::uint64_t open = focus & ~supp;
        struct Cand {
            int rank;
            Move m;
        };
        std::vector<Cand> order;
        order.reserve(16);
        for (int u = 0; u < n; ++u) {
            const int cu = counts[static_cast<std::size_t>(u)];
            if (cu < 2) continue;
            int du = std::numeric_limits<int>::max();
            for (std::uint64_t b = open; b != 0; b &= b - 1) du = std::min(du, eng.dist_(u, std::countr_zero(b)));
            const bool drains_target = ((focus >> u) & 1U) && cu == 2;
            for (Vertex w : eng.g_.neighbors(u)) {
                int dw = std::numeric_limits<int>::max();
                for (std::uint64_t b = open; b != 0; b &= b - 1) dw = std::min(dw, eng.dist_(w, std::countr_zero(b)));
                int rank = dw == 0 ? 0 : (dw < du ? 1 : 3);
                if (drains_target) rank += 1;
                rank = rank * 1024 - std::min(cu, 1023);
                order.push_back({rank, {u, w}});
            }
        }
        std::stable_sort(order.begin(), order.end(), [](const Cand& a, const Cand& b) { return a.rank < b.rank; });

        for (const Cand& c : order) {
            counts[static_cast<std::size_t>(c.m.from)] -= 2;
            counts[static_cast<std::size_t>(c.m.to)] += 1;
            path.push_back(c.m);
            const bool ok = search(total - 1);
            if (ok) return true;
            path.pop_back();
            counts[static_cast<std::size_t>(c.m.from)] += 2;
            counts[static_cast<std::size_t>(c.m.to)] -= 1;
        }
        return false;
    }
};

ReachabilityEngine::ReachabilityEngine(const Graph& g, EngineOptions options)
    : g_(g), options_(options), n_(g.order()), dist_(g) {
    if (!g.fits_vertex_set()) throw InvalidArgument("graph too large for the reachability engine");
    const int diam = dist_.diameter();  // throws DisconnectedGraph
    use_potential_ = diam <= 30;
    if (use_potential_) {
        weight_.resize(static_cast<std::size_t>(n_ * n_));
        for (int r = 0; r < n_; ++r)
            for (int v = 0; v < n_; ++v) weight_[static_cast<std::size_t>(r * n_ + v)] = std::uint64_t{1} << (diam - dist_(v, r));
    }
}

ReachAnyResult ReachabilityEngine::reach_any(const Distribution& d, std::span<const VertexSet> targets) {
    if (targets.empty()) throw InvalidArgument("target family must be non-empty");
    if (d.order() != n_) throw InvalidArgument("distribution does not match graph order");
    for (VertexSet t : targets)
        if (!t.is_subset_of(g_.vertex_set())) throw InvalidArgument("target references a vertex outside the graph");

    Query q(*this, d, targets);
    const bool ok = q.search(d.total());
    last_states_ = q.expanded;
    ReachAnyResult out;
    out.reachable = ok;
    if (ok) {
        out.target_index = q.hit;
        if (options_.want_certificate) out.certificate = MoveCertificate{std::move(q.path)};
    }
    return out;
}

ReachResult ReachabilityEngine::reach_set(const Distribution& d, VertexSet target) {
    auto any = reach_any(d, std::span<const VertexSet>(&target, 1));
    return {any.reachable, std::move(any.certificate)};
}

ReachResult can_reach_set(const Graph& g, const Distribution& d, VertexSet target) {
    ReachabilityEngine eng(g);
    return eng.reach_set(d, target);
}

ReachAnyResult can_reach_any(const Graph& g, const Distribution& d, std::span<const VertexSet> targets) {
    ReachabilityEngine eng(g);
    return eng.reach_any(d, targets);
}

// ---------------------------------------------------------------------------

Distribution parse_distribution(const std::string& text, int n) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument(std::string("malformed distribution array: ") + e.what());
        }
        if (!j.is_array() || static_cast<int>(j.size()) != n)
            throw InvalidArgument("distribution array must have exactly " + std::to_string(n) + " entries");
        std::vector<int> counts;
        for (const auto& x : j) {
            if (!x.is_number_integer() || x.get<long long>() < 0) throw InvalidArgument("distribution entries must be non-negative integers");
            counts.push_back(x.get<int>());
        }
        return Distribution(std::move(counts));
    }
    Distribution d = Distribution::zeros(n);
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto a = item.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) throw InvalidArgument("expected vertex:count, got '" + item + "'");
        long long v = 0, c = 0;
        try {
            std::size_t used = 0;
            v = std::stoll(item.substr(0, colon), &used);
            c = std::stoll(item.substr(colon + 1), &used);
        } catch (const std::exception&) {
            throw InvalidArgument("expected vertex:count, got '" + item + "'");
        }
        if (v < 0 || v >= n) throw InvalidArgument("distribution vertex out of range: " + std::to_string(v));
        if (c < 0 || c > std::numeric_limits<int>::max() / 2) throw InvalidArgument("pebble count out of range");
        d.add(static_cast<Vertex>(v), static_cast<int>(c));
    }
    return d;
}

std::string format_distribution(const Distribution& d) {
    std::string out;
    for (int v = 0; v < d.order(); ++v) {
        if (d[v] == 0) continue;
        if (!out.empty()) out += ',';
        out += std::to_string(v) + ":" + std::to_string(d[v]);
    }
    return out;
}

}  // namespace svcp
