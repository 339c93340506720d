#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svcp/bigint.hpp"
#include "svcp/graph.hpp"

namespace svcp {

// A closed-form value evaluated from family parameters. `value` is set only
// when the parameters satisfy the result's hypotheses; otherwise `reason`
// names the violated condition. `note` carries warnings that do not block
// evaluation (known conflicts with other formulas).
struct FormulaResult {
    FamilySpec family;
    std::string invariant;  // "f_svcp", "alpha_s", "sigma"
    std::string formula;    // short description of the closed form
    bool applicable = false;
    bool upper_bound = false;  // value is a bound, not an exact value
    std::optional<BigInt> value;
    std::string reason;
    std::string note;
};

FormulaResult f_svcp_complete(int n);
FormulaResult f_svcp_multipartite(const std::vector<int>& parts);
FormulaResult f_svcp_star(int leaves);
FormulaResult f_svcp_path(int n);
FormulaResult f_svcp_friendship(int triangles);
FormulaResult f_svcp_wheel(int rim);
// Upper bound gamma(G + G') - 4; gamma_join is supplied by the caller.
FormulaResult f_svcp_join_bound(const FamilySpec& left, const FamilySpec& right, long long gamma_join);
// f(K_m) + f(K_n) + 3 using the complete-graph formula on each side.
FormulaResult f_svcp_join_complete(int m, int n);

FormulaResult alpha_s_formula(const FamilySpec& spec);

// Picks the closed form that applies to the family.
FormulaResult f_svcp_formula(const FamilySpec& spec);

// Expected sigma(K_{1,n}), taken to equal f_svcp(K_{1,n}).
FormulaResult sigma_star_claim(int leaves);
// Whether sigma(P_n) = f_svcp(P_n) is expected (only n = 1, 2).
bool path_sigma_equality_claimed(int n);
// Friendship graphs: compares an independence-type number with f_svcp; both
// sides are returned for inspection (alpha_s formula, f_svcp formula).
std::pair<FormulaResult, FormulaResult> friendship_alpha_vs_f_svcp(int triangles);

// ---- w_n ----------------------------------------------------------------------

// (2^{5s} - 1) / 31
BigInt q_s(int s);
// Closed form: w_n = 2^l * 13 q_s + w_l for n >= 5 (s = n / 5, l = n % 5).
BigInt w_n(int n);
// Independent route: base cases plus w_n = w_{n-5} + 13 * 2^l * 2^{5(s-1)}.
BigInt w_n_recurrence(int n);

}  // namespace svcp
