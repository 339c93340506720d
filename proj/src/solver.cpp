#include "svcp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "svcp/errors.hpp"

namespace svcp {

std::string invariant_name(Invariant inv) {
    switch (inv) {
        case Invariant::gamma: return "gamma";
        case Invariant::sigma: return "sigma";
        case Invariant::f_svcp: return "f_svcp";
    }
    return "?";
}

std::vector<VertexSet> target_family(const Graph& g, Invariant inv, int enumeration_cap) {
    switch (inv) {
        case Invariant::gamma: return {g.vertex_set()};
        case Invariant::sigma: return minimal_vertex_covers(g, enumeration_cap);
        case Invariant::f_svcp: return minimal_secure_covers(g, enumeration_cap);
    }
    throw InvalidArgument("unknown invariant");
}

CompositionCursor::CompositionCursor(int n, int pebbles) : c_(static_cast<std::size_t>(n), 0) {
    if (n < 1) throw InvalidArgument("compositions need at least one part");
    if (pebbles < 0) throw InvalidArgument("pebble count must be non-negative");
    c_[0] = pebbles;
}

bool CompositionCursor::next() {
    const int n = static_cast<int>(c_.size());
    int i = n - 2;
    while (i >= 0 && c_[static_cast<std::size_t>(i)] == 0) --i;
    if (i < 0) return false;
    const int tail = c_[static_cast<std::size_t>(n - 1)];
    c_[static_cast<std::size_t>(n - 1)] = 0;
    --c_[static_cast<std::size_t>(i)];
    c_[static_cast<std::size_t>(i + 1)] = tail + 1;
    return true;
}

std::uint64_t distribution_count(int n, int pebbles) {
    if (n < 1 || pebbles < 0) return 0;
    // C(pebbles + k, k) with k = n - 1, built incrementally; each partial is itself a binomial.
    const std::uint64_t k = static_cast<std::uint64_t>(n - 1);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(pebbles) + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

namespace {

int worker_count(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

bool pretest(std::span<const VertexSet> family, VertexSet support) {
    return std::any_of(family.begin(), family.end(), [&](VertexSet t) { return t.is_subset_of(support); });
}

// A chunk is every distribution sharing the same values on the first
// `prefix_len` vertices; chunks in order concatenate to the global order.
struct Chunk {
    std::vector<int> prefix;
    int remainder = 0;
};

std::vector<Chunk> make_chunks(int n, int pebbles) {
    const int prefix_len = std::min(2, n - 1);
    std::vector<Chunk> chunks;
    if (prefix_len == 0) {
        chunks.push_back({{}, pebbles});
        return chunks;
    }
    for (int a = pebbles; a >= 0; --a) {
        if (prefix_len == 1) {
            chunks.push_back({{a}, pebbles - a});
            continue;
        }
        for (int b = pebbles - a; b >= 0; --b) chunks.push_back({{a, b}, pebbles - a - b});
    }
    return chunks;
}

struct ChunkResult {
    bool processed = false;
    std::optional<Distribution> failure;
    std::optional<Distribution> hardest;
    std::uint64_t hardest_states = 0;
    SolverStats stats;
};

}  // namespace

LevelResult scan_level(const Graph& g, std::span<const VertexSet> family, int pebbles, const SolverOptions& opts,
                       bool stop_at_first_failure) {
    if (family.empty()) throw InvalidArgument("target family must be non-empty");
    const int n = g.order();
    const std::uint64_t count = distribution_count(n, pebbles);
    if (count > opts.max_distributions)
        throw CapExceeded("scan level m=" + std::to_string(pebbles) + " has " + std::to_string(count) +
                          " distributions, above the cap of " + std::to_string(opts.max_distributions));

    const std::vector<Chunk> chunks = make_chunks(n, pebbles);
    std::vector<ChunkResult> results(chunks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_fail{std::numeric_limits<std::size_t>::max()};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&]() {
        try {
            ReachabilityEngine engine(g, {opts.max_states, false});
            std::vector<int> full(static_cast<std::size_t>(n));
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= chunks.size()) return;
                if (stop_at_first_failure && c > first_fail.load()) continue;
                const Chunk& ch = chunks[c];
                ChunkResult& res = results[c];
                const std::size_t plen = ch.prefix.size();
                std::copy(ch.prefix.begin(), ch.prefix.end(), full.begin());
                CompositionCursor cur(n - static_cast<int>(plen), ch.remainder);
                bool aborted = false;
                do {
                    if (stop_at_first_failure && c > first_fail.load()) {
                        aborted = true;
                        break;
                    }
                    std::copy(cur.current().begin(), cur.current().end(), full.begin() + static_cast<std::ptrdiff_t>(plen));
                    Distribution d(full);
                    ++res.stats.distributions_examined;
                    std::uint64_t states = 0;
                    bool solvable = true;
                    if (pretest(family, d.support())) {
                        ++res.stats.pretest_hits;
                    } else {
                        solvable = engine.reach_any(d, family).reachable;
                        states = engine.last_states();
                        res.stats.states_expanded += states;
                    }
                    if (!res.hardest || states > res.hardest_states) {
                        res.hardest = d;
                        res.hardest_states = states;
                    }
                    if (!solvable) {
                        if (!res.failure) res.failure = d;
                        if (stop_at_first_failure) {
                            std::size_t seen = first_fail.load();
                            while (c < seen && !first_fail.compare_exchange_weak(seen, c)) {
                            }
                            break;
                        }
                    }
                } while (cur.next());
                res.processed = !aborted;
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            first_fail.store(0);
        }
    };

    const int workers = std::min<int>(worker_count(opts.jobs), static_cast<int>(chunks.size()));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    LevelResult out;
    out.stats.levels_scanned = 1;
    for (const ChunkResult& res : results) {
        if (!res.processed && !res.failure) break;  // only chunks after the first failure are skipped
        out.stats.distributions_examined += res.stats.distributions_examined;
        out.stats.pretest_hits += res.stats.pretest_hits;
        out.stats.states_expanded += res.stats.states_expanded;
        if (res.hardest && (!out.hardest || res.hardest_states > out.hardest_states)) {
            out.hardest = res.hardest;
            out.hardest_states = res.hardest_states;
        }
        if (res.failure) {
            out.all_solvable = false;
            if (!out.first_failure) out.first_failure = res.failure;
            if (stop_at_first_failure) break;
        }
    }
    return out;
}

int stacked_lower_bound(const Graph& g, std::span<const VertexSet> family, const SolverOptions& opts) {
    if (family.empty()) throw InvalidArgument("target family must be non-empty");
    ReachabilityEngine engine(g, {opts.max_states, false});
    const DistanceMatrix dist(g);
    const int n = g.order();
    auto solvable = [&](Vertex v, int k) {
        Distribution d = Distribution::stacked(n, v, k);
        if (pretest(family, d.support())) return true;
        return engine.reach_any(d, family).reachable;
    };
    int best = 0;
    for (Vertex v = 0; v < n; ++v) {
        // Enough to pebble every vertex from a stack on v.
        long long hi = 0;
        for (Vertex u = 0; u < n; ++u) hi += 1LL << dist(v, u);
        if (hi > (1LL << 28)) throw CapExceeded("stack size needed to cover the graph is too large");
        int lo = 0;
        int up = static_cast<int>(hi);
        while (lo < up) {
            const int mid = lo + (up - lo) / 2;
            if (solvable(v, mid)) up = mid;
            else lo = mid + 1;
        }
        best = std::max(best, lo);
    }
    return best;
}

InvariantReport compute_invariant(const Graph& g, Invariant inv, const SolverOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!g.is_connected()) throw DisconnectedGraph();
    const std::vector<VertexSet> family = target_family(g, inv, opts.enumeration_cap);
    if (family.empty()) throw InvalidArgument("graph has no target set for " + invariant_name(inv));

    InvariantReport rep;
    rep.invariant = inv;
    rep.scan_start = stacked_lower_bound(g, family, opts);

    auto absorb = [&](const SolverStats& s) {
        rep.stats.distributions_examined += s.distributions_examined;
        rep.stats.pretest_hits += s.pretest_hits;
        rep.stats.states_expanded += s.states_expanded;
        rep.stats.levels_scanned += s.levels_scanned;
    };

    // Solvability is monotone in the pebble count, so the first fully
    // solvable level is the invariant.
    for (int m = rep.scan_start;; ++m) {
        LevelResult level = scan_level(g, family, m, opts, true);
        absorb(level.stats);
        if (level.all_solvable) {
            rep.value = m;
            rep.hardest = level.hardest;
            break;
        }
    }

    if (rep.value > 0) {
        LevelResult below = scan_level(g, family, rep.value - 1, opts, true);
        absorb(below.stats);
        if (!below.first_failure) throw std::logic_error("scan started above the invariant");
        rep.witness_unsolvable = below.first_failure;
    }

    if (rep.hardest) {
        ReachabilityEngine engine(g, {opts.max_states, true});
        auto r = engine.reach_any(*rep.hardest, family);
        if (!r.reachable) throw std::logic_error("hardest distribution became unsolvable on replay");
        rep.sample_certificate = r.certificate;
    }

    rep.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

SandwichReport check_sandwich(const Graph& g, const SolverOptions& opts) {
    SandwichReport rep;
    rep.order = g.order();
    rep.diameter = diameter(g);
    rep.sigma = compute_sigma(g, opts);
    rep.f_svcp = compute_f_svcp(g, opts);
    rep.gamma = compute_gamma(g, opts);
    rep.lower_bound = rep.order - 1;
    rep.upper_bound = rep.diameter == 0 ? 0 : static_cast<long long>(rep.order - 1) << (rep.diameter - 1);

    const int s = rep.sigma.value, f = rep.f_svcp.value, gm = rep.gamma.value;
    rep.sandwich_holds = s <= f && f <= gm;
    rep.bounds_hold = rep.lower_bound <= f && f <= rep.upper_bound;
    if (s > f) rep.violations.push_back("sigma=" + std::to_string(s) + " exceeds f_svcp=" + std::to_string(f));
    if (f > gm) rep.violations.push_back("f_svcp=" + std::to_string(f) + " exceeds gamma=" + std::to_string(gm));
    if (f < rep.lower_bound)
        rep.violations.push_back("f_svcp=" + std::to_string(f) + " below n-1=" + std::to_string(rep.lower_bound));
    if (f > rep.upper_bound)
        rep.violations.push_back("f_svcp=" + std::to_string(f) + " above (n-1)2^(d-1)=" + std::to_string(rep.upper_bound));
    return rep;
}

}  // namespace svcp
