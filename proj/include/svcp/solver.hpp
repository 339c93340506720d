#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svcp/covers.hpp"
#include "svcp/graph.hpp"
#include "svcp/pebbling.hpp"

namespace svcp {

enum class Invariant { gamma, sigma, f_svcp };

std::string invariant_name(Invariant inv);

struct SolverOptions {
    // Refuse a scan level holding more than this many distributions.
    std::uint64_t max_distributions = 100'000'000;
    // Per-search state cap handed to each engine; 0 = unlimited.
    std::uint64_t max_states = 0;
    int enumeration_cap = kDefaultEnumerationCap;
    // Worker threads; 0 = hardware concurrency.
    int jobs = 0;
};

struct SolverStats {
    std::uint64_t distributions_examined = 0;
    std::uint64_t pretest_hits = 0;  // solved by support alone, engine skipped
    std::uint64_t states_expanded = 0;
    int levels_scanned = 0;
    double wall_seconds = 0.0;
};

struct InvariantReport {
    Invariant invariant = Invariant::f_svcp;
    int value = 0;
    int scan_start = 0;
    // Lexicographically first unsolvable distribution with value-1 pebbles;
    // absent only when value == 0.
    std::optional<Distribution> witness_unsolvable;
    // The size-`value` distribution whose search expanded the most states.
    std::optional<Distribution> hardest;
    std::optional<MoveCertificate> sample_certificate;
    SolverStats stats;
};

// Target family whose "some member is reached" defines the invariant:
// {V} for gamma, minimal vertex covers for sigma, minimal secure covers for f_svcp.
std::vector<VertexSet> target_family(const Graph& g, Invariant inv, int enumeration_cap = kDefaultEnumerationCap);

// Steps through every distribution of `pebbles` pebbles on `n` vertices in
// descending lexicographic order, starting from (pebbles, 0, ..., 0).
class CompositionCursor {
public:
    CompositionCursor(int n, int pebbles);
    const std::vector<int>& current() const { return c_; }
    bool next();

private:
    std::vector<int> c_;
};

// C(pebbles + n - 1, n - 1), saturating at UINT64_MAX.
std::uint64_t distribution_count(int n, int pebbles);

struct LevelResult {
    bool all_solvable = true;
    std::optional<Distribution> first_failure;
    std::optional<Distribution> hardest;
    std::uint64_t hardest_states = 0;
    SolverStats stats;
};

// Decides every distribution of `pebbles` pebbles. With stop_at_first_failure
// the scan ends at the lexicographically first unsolvable distribution.
LevelResult scan_level(const Graph& g, std::span<const VertexSet> family, int pebbles, const SolverOptions& opts,
                       bool stop_at_first_failure = true);

// max over v of (1 + largest k with k pebbles stacked on v unsolvable); 0 if
// every stack, even the empty one, is solvable.
int stacked_lower_bound(const Graph& g, std::span<const VertexSet> family, const SolverOptions& opts = {});

InvariantReport compute_invariant(const Graph& g, Invariant inv, const SolverOptions& opts = {});
inline InvariantReport compute_f_svcp(const Graph& g, const SolverOptions& opts = {}) {
    return compute_invariant(g, Invariant::f_svcp, opts);
}
inline InvariantReport compute_gamma(const Graph& g, const SolverOptions& opts = {}) {
    return compute_invariant(g, Invariant::gamma, opts);
}
inline InvariantReport compute_sigma(const Graph& g, const SolverOptions& opts = {}) {
    return compute_invariant(g, Invariant::sigma, opts);
}

struct SandwichReport {
    int order = 0;
    int diameter = 0;
    InvariantReport sigma;
    InvariantReport f_svcp;
    InvariantReport gamma;
    long long lower_bound = 0;  // n - 1
    long long upper_bound = 0;  // (n - 1) 2^(d - 1)
    bool sandwich_holds = false;
    bool bounds_hold = false;
    std::vector<std::string> violations;

    bool ok() const { return sandwich_holds && bounds_hold; }
};

// sigma <= f_svcp <= gamma and n-1 <= f_svcp <= (n-1) 2^(d-1).
SandwichReport check_sandwich(const Graph& g, const SolverOptions& opts = {});

}  // namespace svcp
