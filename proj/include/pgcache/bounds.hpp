#pragma once

#include "pgcache/caching_graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pgcache {

/// Nested-neighborhood converse: sum of rho_j = |intersection of the first j
/// users' missing-subfile sets| over the ordering.  Lower-bounds R* x F for
/// the caching scheme of g (the ordering's users must be distinct and demand
/// distinct files, so its length is capped by N elsewhere).
BigInt mais_bound(const CachingGraph& g, const std::vector<uint32_t>& ordering);

/// Greedy ordering: start from the max-degree user, then keep the user
/// maximizing the surviving intersection; ties to the lowest index; stops
/// before the intersection hits zero.
std::vector<uint32_t> greedy_ordering(const CachingGraph& g);

/// Exact maximum of mais_bound over all orderings (prefix search with
/// pruning); intended for K <= 10.
BigInt mais_exhaustive(const CachingGraph& g);

/// R* >= ((K + F)(1 - M/N) - 1)/F for any symmetric caching scheme.
Rational bound_corollary2(const BigInt& users_k, const BigInt& subfiles_f, const Rational& mn);

/// Bi-regular converse: rho_1 = D, rho_j = ceil((d-j+1) rho_{j-1}/(K-j+1)),
/// d terms, divided by F.  Requires D = F(1-M/N) and d = K(1-M/N) integral.
Rational bound_theorem6(const BigInt& users_k, const BigInt& subfiles_f, const Rational& mn);

/// PDA-class converse: t_1 = ceil(DK/F), t_j = ceil((D-j+1) t_{j-1}/(F-j+1)),
/// D terms, divided by F.
Rational bound_cheng(const BigInt& users_k, const BigInt& subfiles_f, const Rational& mn);

/// Subpacketization-free cut-set style bound K(1-M/N)/(1 + KM/N).
Rational bound_wtp(const BigInt& users_k, const Rational& mn);

struct BoundRow {
    BigInt users_k, subfiles_f, left_degree_d;
    Rational mn;
    Rational corollary2, theorem6, cheng, wtp;
    std::optional<Rational> achieved;  // S/F of the matching constructed scheme, if any
    std::string note;                  // flags printed-table inconsistencies
};

/// Evaluates all four bounds on (K, F, D) rows; attaches the constructed
/// scheme rate when (K, F) matches an instance on the standard search grid.
std::vector<BoundRow> table8_report(const std::vector<std::array<BigInt, 3>>& rows);

}  // namespace pgcache
