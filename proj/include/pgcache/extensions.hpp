#pragma once

#include "pgcache/pda.hpp"
#include "pgcache/scheme_b.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace pgcache {

/// Map-Reduce adaptation of the construction: nodes = users, batches =
/// subfiles, a node maps batch f iff the PDA cell (f, node) is a star.
struct CdcParams {
    BigInt nodes;                // K^C
    BigInt batches;              // F^C
    Rational computation_load;   // r^C = K Z / F
    Rational communication_load; // L^C = g/(g-1) * S/(K F)
    /// node -> batch bitmap; only materialized when the instance fits the cap
    std::vector<boost::dynamic_bitset<>> batch_assignment;
    bool assignment_built = false;
};

CdcParams cdc_from_scheme_b(const SchemeBParams& p, uint64_t cap = kDefaultEnumCap,
                            bool build_assignment = true);

/// Cache-aided interference channel built on the n = 1 construction:
/// receiver groups are the 1-dim subspaces, each with L receivers, and every
/// round serves the (m+1)L receivers of one independent (m+1)-set.
struct IcParams {
    unsigned k = 0, m = 0, q = 0, group_size = 0;  // group_size = L
    uint32_t transmitters = 0;                      // K_T
    uint32_t transmitter_files = 0;                 // M_T
    uint32_t n_files = 0;                           // N
    BigInt receivers;                               // K_R = L [k 1]
    Rational receiver_cache_fraction;               // M_R/N
    BigInt subpacketization;                        // F of the n=1 construction
    unsigned sum_dof = 0;                           // L (m+1)
    std::vector<Subspace> groups;                   // 1-dim subspaces, enumeration order
    std::vector<std::vector<uint32_t>> subfiles;    // the Y's (m-sets of group indices)
    std::vector<std::vector<uint32_t>> rounds;      // the Z's ((m+1)-sets of group indices)
    std::vector<std::vector<uint32_t>> tx_cache;    // per transmitter, sorted cached file ids
    BigInt rounds_per_receiver;                     // the user degree D

    uint32_t receiver_count() const { return static_cast<uint32_t>(groups.size()) * group_size; }
    uint32_t group_of(uint32_t receiver) const { return receiver / group_size; }
};

/// Builds the IC instance.  Defaults: N = K_R; K_T = 2L when N is even
/// (cyclic layout then stores each file at exactly L transmitters), else
/// K_T = N with M_T = L.
IcParams ic_scheme(unsigned k, unsigned m, unsigned q, unsigned L,
                   std::optional<uint32_t> transmitters = std::nullopt,
                   std::optional<uint32_t> n_files = std::nullopt,
                   uint64_t cap = kDefaultEnumCap);

using Cplx = std::complex<double>;
using CMatrix = std::vector<std::vector<Cplx>>;  // row major

/// Per-round zero-forcing result: one K_T x L precoder per served group.
struct ZfRound {
    std::vector<CMatrix> precoders;
    std::vector<uint32_t> served;  // receiver ids, L per group
    double max_residual = 0.0;     // max |H_j A_j - I| entry over groups
};

/// Solves the precoders for one round against explicit channel matrices
/// (channels[j] is L x K_T for the round's j-th group).  Column i of A_j is
/// supported exactly on the transmitters caching the demanded file of
/// receiver j(i).  Throws ArgumentError on a singular L x L subsystem.
ZfRound zero_force_round(const IcParams& ic, uint32_t round_index,
                         const std::vector<uint32_t>& receiver_demands,
                         const std::vector<CMatrix>& channels);

/// Samples the round's channels from `seed` (complex standard normal) and
/// solves; resamples up to 3 times if a subsystem is singular.
ZfRound zero_force_round_seeded(const IcParams& ic, uint32_t round_index,
                                const std::vector<uint32_t>& receiver_demands, uint64_t seed);

}  // namespace pgcache
