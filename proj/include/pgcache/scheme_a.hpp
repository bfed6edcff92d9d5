#pragma once

#include "pgcache/caching_graph.hpp"
#include "pgcache/subspace.hpp"

#include <utility>
#include <vector>

namespace pgcache {

/// Users are the t-dim subspaces of F_q^k, subfiles the (m+t)-dim ones, and a
/// user misses exactly the subfiles containing it.
struct SchemeAParams {
    unsigned k, m, t, q;
};

/// Closed forms: K=[k t], F=[k m+t], D=[k-t m], S=[k m], g=[k-m t].
SchemeReport scheme_a_params(const SchemeAParams& p);

/// Pairs every t-dim subspace V of x with an m-dim T such that V (+) T = x,
/// bijectively, via a perfect matching of the direct-sum bipartite graph.
/// Returned in enumeration order of V.  The specific matching is an
/// implementation choice; only the direct-sum property is contractual.
std::vector<std::pair<Subspace, Subspace>> matching_subspaces(const Subspace& x, unsigned m,
                                                              unsigned t);

struct SchemeABuild {
    CachingGraph graph;
    MatchingCover cover;
    SchemeReport report;
    std::vector<Subspace> users;     // t-dim, enumeration order
    std::vector<Subspace> subfiles;  // (m+t)-dim, enumeration order
    std::vector<Subspace> classes;   // the m-dim subspace indexing each matching
};

SchemeABuild build_scheme_a(const SchemeAParams& p, uint64_t cap = kDefaultEnumCap);

}  // namespace pgcache
