#include "svcp/formulas.hpp"

#include <numeric>

#include "svcp/errors.hpp"

namespace svcp {

namespace {

FormulaResult make(FamilySpec spec, std::string invariant, std::string formula) {
    FormulaResult r;
    r.family = std::move(spec);
    r.invariant = std::move(invariant);
    r.formula = std::move(formula);
    return r;
}

FormulaResult with_value(FormulaResult r, BigInt v) {
    r.applicable = true;
    r.value = std::move(v);
    return r;
}

FormulaResult inapplicable(FormulaResult r, std::string reason) {
    r.applicable = false;
    r.value.reset();
    r.reason = std::move(reason);
    return r;
}

constexpr int kBaseW[5] = {0, 1, 1, 3, 6};

}  // namespace

FormulaResult f_svcp_complete(int n) {
    auto r = make(FamilySpec::complete(n), "f_svcp", "complete: 2n-3");
    if (n < 2) return inapplicable(std::move(r), "complete-graph formula requires n >= 2");
    return with_value(std::move(r), BigInt(2 * n - 3));
}

FormulaResult f_svcp_multipartite(const std::vector<int>& parts) {
    auto spec = FamilySpec::multipartite(parts);
    validate(spec);
    auto r = make(spec, "f_svcp", "multipartite: 4p1+2(n-p1)-7");
    if (parts.front() < 2) {
        // Every part has one vertex: this is K_r.
        auto k = f_svcp_complete(static_cast<int>(parts.size()));
        k.family = spec;
        k.note = "p_1 < 2: all parts are singletons, evaluated as K_" + std::to_string(parts.size());
        return k;
    }
    const long long rest = std::accumulate(parts.begin() + 1, parts.end(), 0LL);
    return with_value(std::move(r), BigInt(4LL * parts.front() + 2 * rest - 7));
}

FormulaResult f_svcp_star(int leaves) {
    if (leaves < 1) throw InvalidArgument("star needs at least one leaf");
    auto r = leaves >= 2 ? f_svcp_multipartite({leaves, 1}) : f_svcp_complete(2);
    r.family = FamilySpec::star(leaves);
    return r;
}

BigInt q_s(int s) {
    if (s < 0) throw InvalidArgument("q_s needs s >= 0");
    return ((BigInt(1) << (5 * s)) - 1) / 31;
}

BigInt w_n(int n) {
    if (n < 0) throw InvalidArgument("w_n needs n >= 0");
    if (n < 5) return kBaseW[n];
    const int s = n / 5, l = n % 5;
    return (BigInt(13) * q_s(s) << l) + kBaseW[l];
}

BigInt w_n_recurrence(int n) {
    if (n < 0) throw InvalidArgument("w_n needs n >= 0");
    BigInt w = kBaseW[n % 5];
    const int l = n % 5;
    for (int s = 1; s <= n / 5; ++s) w += BigInt(13) << (l + 5 * (s - 1));
    return w;
}

FormulaResult f_svcp_path(int n) {
    auto r = make(FamilySpec::path(n), "f_svcp", "path: w_n");
    if (n < 1) return inapplicable(std::move(r), "path needs n >= 1");
    return with_value(std::move(r), w_n(n));
}

FormulaResult f_svcp_friendship(int triangles) {
    auto r = make(FamilySpec::friendship(triangles), "f_svcp", "friendship: 4(n-1)+3");
    if (triangles < 1) return inapplicable(std::move(r), "friendship graph needs n >= 1");
    r = with_value(std::move(r), BigInt(4 * (triangles - 1) + 3));
    if (triangles == 1) r.note = "F_1 = K_3; agrees with the complete-graph formula (3)";
    return r;
}

FormulaResult f_svcp_wheel(int rim) {
    auto r = make(FamilySpec::wheel(rim), "f_svcp", "wheel: 12s + c(l)");
    if (rim < 3) return inapplicable(std::move(r), "wheel formula requires rim 5s + l >= 3");
    const int s = rim / 5, l = rim % 5;
    long long v = 0;
    switch (l) {
        case 0: v = 12LL * s - 1; break;
        case 1: v = 12LL * s + 3; break;
        case 2:
        case 3: v = 12LL * s + 7; break;
        default: v = 12LL * s + 11; break;
    }
    r = with_value(std::move(r), BigInt(v));
    if (rim == 3) r.note = "conflicts with the complete-graph formula at rim=3 (W_3 = K_4 gives 5); brute force adjudicates";
    return r;
}

FormulaResult f_svcp_join_bound(const FamilySpec& left, const FamilySpec& right, long long gamma_join) {
    auto r = make(FamilySpec::join_of(left, right), "f_svcp", "join: gamma-4");
    r = with_value(std::move(r), BigInt(gamma_join - 4));
    r.upper_bound = true;
    return r;
}

FormulaResult f_svcp_join_complete(int m, int n) {
    auto r = make(FamilySpec::join_of(FamilySpec::complete(m), FamilySpec::complete(n)), "f_svcp", "join of complete graphs");
    if (m < 1 || n < 1) return inapplicable(std::move(r), "join of complete graphs requires m, n >= 1");
    // Each side through 2k - 3 (which is -1 at k = 1); only the sum is meaningful.
    return with_value(std::move(r), BigInt((2 * m - 3) + (2 * n - 3) + 3));
}

FormulaResult alpha_s_formula(const FamilySpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::complete_multipartite: {
            auto r = make(spec, "alpha_s", "alpha_s: n-1");
            const int n = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
            return with_value(std::move(r), BigInt(n - 1));
        }
        case Family::star: return with_value(make(spec, "alpha_s", "alpha_s: n-1"), BigInt(spec.n));
        case Family::complete: return with_value(make(spec, "alpha_s", "alpha_s: n-1"), BigInt(spec.n - 1));
        case Family::friendship: return with_value(make(spec, "alpha_s", "alpha_s: n+1"), BigInt(spec.n + 1));
        default:
            return inapplicable(make(spec, "alpha_s", "-"), "no closed form for " + family_name(spec.family));
    }
}

FormulaResult f_svcp_formula(const FamilySpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::path: return f_svcp_path(spec.n);
        case Family::complete: return f_svcp_complete(spec.n);
        case Family::star: return f_svcp_star(spec.n);
        case Family::complete_multipartite: return f_svcp_multipartite(spec.parts);
        case Family::friendship: return f_svcp_friendship(spec.n);
        case Family::wheel: return f_svcp_wheel(spec.n);
        case Family::join:
            if (spec.operands[0].family == Family::complete && spec.operands[1].family == Family::complete)
                return f_svcp_join_complete(spec.operands[0].n, spec.operands[1].n);
            return inapplicable(make(spec, "f_svcp", "join: gamma-4"),
                                "only joins of complete graphs have an exact value; use the gamma - 4 bound");
        default:
            return inapplicable(make(spec, "f_svcp", "-"), "no closed form for " + family_name(spec.family));
    }
}

FormulaResult sigma_star_claim(int leaves) {
    auto r = f_svcp_star(leaves);
    r.invariant = "sigma";
    r.formula = "sigma of star";
    return r;
}

bool path_sigma_equality_claimed(int n) { return n == 1 || n == 2; }

std::pair<FormulaResult, FormulaResult> friendship_alpha_vs_f_svcp(int triangles) {
    auto a = alpha_s_formula(FamilySpec::friendship(triangles));
    auto f = f_svcp_friendship(triangles);
    a.formula = "friendship alpha_s vs f_svcp";
    f.formula = "friendship alpha_s vs f_svcp";
    a.note = "claimed equal to f_svcp(F_n); the two sides are reported, not asserted";
    return {a, f};
}

}  // namespace svcp
