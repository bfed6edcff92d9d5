#pragma once

#include "pgcache/caching_graph.hpp"
#include "pgcache/subspace.hpp"

#include <cstdint>
#include <vector>

namespace pgcache {

/// Users are n-sized independent sets of l-dim subspaces, subfiles m-sized
/// ones; a user misses a subfile iff their union is an (n+m)-sized
/// independent set.  l = 1 is the plain construction, l > 1 the generalized
/// one.
struct SchemeBParams {
    unsigned k, n, m;
    unsigned l = 1;
    unsigned q = 2;
};

/// (1/b!) prod_{i=0}^{b-1} (theta(k) - theta(a+i)): the number of b-sized
/// sets of 1-dim subspaces whose sum with a fixed a-dim subspace has
/// dimension a+b.
BigInt count_independent_sets(unsigned k, unsigned a, unsigned b, unsigned q);

/// Same count for b-sized sets of l-dim subspaces over a fixed `fixed_dim`-dim
/// subspace (the generalized construction's counting argument).
BigInt count_generator_sets(unsigned k, unsigned fixed_dim, unsigned b, unsigned l, unsigned q);

/// Closed forms for K, F, D, S, g and the derived rationals.
SchemeReport scheme_b_params(const SchemeBParams& p);

/// All `set_size`-sized independent sets of the given l-dim generators, as
/// sorted index vectors in lexicographic order.  `expected` is the closed
/// form the enumeration must reproduce.
std::vector<std::vector<uint32_t>> enumerate_independent_sets(const std::vector<Subspace>& gens,
                                                              unsigned set_size, unsigned l,
                                                              uint64_t cap,
                                                              const BigInt& expected);

struct SchemeBBuild {
    CachingGraph graph;
    MatchingCover cover;
    SchemeReport report;
    SchemeBParams params;
    std::vector<Subspace> generators;              // all l-dim subspaces, enumeration order
    std::vector<std::vector<uint32_t>> users;      // sorted generator-index sets (the X's)
    std::vector<std::vector<uint32_t>> subfiles;   // the Y's
    std::vector<std::vector<uint32_t>> matchings;  // the Z's, one per transmission

    std::string user_label(uint32_t i) const;
    std::string subfile_label(uint32_t i) const;
};

SchemeBBuild build_scheme_b(const SchemeBParams& p, uint64_t cap = kDefaultEnumCap);

/// Linear-subpacketization specialization: n = m = lambda*q, k = 2n.
struct SchemeCReport {
    SchemeReport report;
    unsigned n = 0, k = 0, q = 0;
    Rational lambda;
    bool f_equals_k = false;
    bool users_bound_holds = false;  // K <= q^{2 lambda^2 q^2} / (lambda q)!
    bool cache_bound_holds = false;  // M/N <= lambda
    bool gain_bound_holds = false;   // gain >= 4^{lambda q} / (2 sqrt(lambda q))
    Rational users_limit;
};
SchemeCReport scheme_c_params(unsigned q, const Rational& lambda);

/// One symbolic line of the delivery algorithm: the XOR of
/// W_{demand(user), subfile} over the matching's edges.
struct SymbolicTransmission {
    uint32_t matching_id = 0;  // 1-based
    struct Term {
        uint32_t user, file, subfile;
    };
    std::vector<Term> terms;
};
std::vector<SymbolicTransmission> algorithm1_transcript(const SchemeBBuild& scheme,
                                                        const std::vector<uint32_t>& demands);

/// Parameter-fitting helper: candidate (k,n,m,l,q) tuples with K >= target
/// users and M/N <= the available cache fraction, ranked by (K - K',
/// mn_slack), ties lexicographic on (q,k,n,m,l).
struct PlanGrid {
    unsigned max_k = 8;
    unsigned max_l = 2;
    std::vector<unsigned> qs{2, 3, 4, 5};
};
struct PlanCandidate {
    SchemeBParams params;
    SchemeReport report;
    BigInt user_excess;
    Rational cache_slack;
};
std::vector<PlanCandidate> plan_parameters(const BigInt& users_wanted,
                                           const Rational& cache_fraction_available,
                                           const PlanGrid& grid = {}, size_t max_results = 20);

}  // namespace pgcache
