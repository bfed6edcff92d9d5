#include "pgcache/extensions.hpp"

#include "pgcache/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pgcache {
namespace {

// partial-pivot solve of an L x L complex system, one right-hand side
std::vector<Cplx> solve_square(CMatrix a, std::vector<Cplx> rhs) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        double best = std::abs(a[col][col]);
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > best) {
                best = std::abs(a[r][col]);
                pivot = r;
            }
        if (best < 1e-12) throw ArgumentError("singular zero-forcing subsystem");
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (size_t r = col + 1; r < n; ++r) {
            Cplx f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Cplx> x(n);
    for (size_t col = n; col-- > 0;) {
        Cplx v = rhs[col];
        for (size_t c = col + 1; c < n; ++c) v -= a[col][c] * x[c];
        x[col] = v / a[col][col];
    }
    return x;
}

}  // namespace

CdcParams cdc_from_scheme_b(const SchemeBParams& p, uint64_t cap, bool build_assignment) {
    SchemeReport r = scheme_b_params(p);
    if (r.matching_size_g < 2)
        throw ArgumentError("distributed-computing adaptation needs g >= 2");
    CdcParams cdc;
    cdc.nodes = r.users_k;
    cdc.batches = r.subfiles_f;
    cdc.computation_load = Rational(r.users_k) * r.cache_fraction;  // K Z / F, Z = F - D
    cdc.communication_load = Rational(r.matching_size_g, r.matching_size_g - 1) *
                             Rational(r.transmissions_s) / Rational(r.users_k * r.subfiles_f);
    if (build_assignment && r.users_k * r.subfiles_f <= cap) {
        SchemeBBuild scheme = build_scheme_b(p, cap);
        Pda pda = cover_to_pda(scheme.graph, scheme.cover);
        cdc.batch_assignment.assign(scheme.graph.num_users(),
                                    boost::dynamic_bitset<>(scheme.graph.num_subfiles()));
        for (uint32_t node = 0; node < pda.cols; ++node)
            for (uint32_t batch = 0; batch < pda.rows; ++batch)
                if (pda.at(batch, node) == 0) cdc.batch_assignment[node].set(batch);
        cdc.assignment_built = true;
    }
    return cdc;
}

IcParams ic_scheme(unsigned k, unsigned m, unsigned q, unsigned L,
                   std::optional<uint32_t> transmitters, std::optional<uint32_t> n_files,
                   uint64_t cap) {
    if (m < 1 || m >= k)
        throw ArgumentError("interference scheme needs 1 <= m < k, got m=" + std::to_string(m) +
                            " k=" + std::to_string(k));
    if (L < 1) throw ArgumentError("L must be >= 1");

    IcParams ic;
    ic.k = k;
    ic.m = m;
    ic.q = q;
    ic.group_size = L;

    const BigInt Q(q);
    BigInt groups_count = theta(k, Q);
    ic.receivers = BigInt(L) * groups_count;
    ic.receiver_cache_fraction =
        1 - Rational(pow_big(Q, m) * theta(k - m, Q), theta(k, Q));
    SchemeBParams base{k, 1, m, 1, q};
    SchemeReport rep = scheme_b_params(base);
    ic.subpacketization = rep.subfiles_f;
    ic.sum_dof = L * (m + 1);
    ic.rounds_per_receiver = rep.left_degree_d;

    if (groups_count > cap)
        throw ResourceError("IC group count " + groups_count.str() + " exceeds cap " +
                                std::to_string(cap),
                            groups_count.str());
    uint32_t n = n_files ? *n_files : static_cast<uint32_t>(ic.receivers);
    ic.n_files = n;

    uint32_t kt;
    if (transmitters) {
        kt = *transmitters;
    } else if (n % 2 == 0) {
        kt = 2 * L;
    } else {
        kt = n;
    }
    if (kt == 0 || (uint64_t(L) * n) % kt != 0)
        throw ArgumentError("K_T=" + std::to_string(kt) + " does not divide L*N=" +
                            std::to_string(uint64_t(L) * n));
    ic.transmitters = kt;
    ic.transmitter_files = static_cast<uint32_t>(uint64_t(L) * n / kt);
    if (ic.transmitter_files > n)
        throw ArgumentError("transmitter cache exceeds the library (L*N/K_T > N)");

    auto field = make_field(q);
    ic.groups = enumerate_subspaces(k, 1, field, cap);
    ic.subfiles = enumerate_independent_sets(ic.groups, m, 1, cap, rep.subfiles_f);
    ic.rounds = enumerate_independent_sets(ic.groups, m + 1, 1, cap, rep.transmissions_s);

    // cyclic layout: transmitter i stores files 1+(p-1 mod N), p in
    // ((i-1)M_T, i M_T]; every file lands on exactly L transmitters
    std::vector<uint32_t> copies(n, 0);
    ic.tx_cache.resize(kt);
    for (uint32_t i = 0; i < kt; ++i) {
        for (uint32_t j = 0; j < ic.transmitter_files; ++j) {
            uint32_t file = (uint64_t(i) * ic.transmitter_files + j) % n;
            ic.tx_cache[i].push_back(file);
            ++copies[file];
        }
        std::sort(ic.tx_cache[i].begin(), ic.tx_cache[i].end());
    }
    for (uint32_t f = 0; f < n; ++f)
        if (copies[f] != L)
            throw ArgumentError("cyclic layout stores file " + std::to_string(f + 1) + " at " +
                                std::to_string(copies[f]) + " transmitters, need L=" +
                                std::to_string(L));
    return ic;
}

ZfRound zero_force_round(const IcParams& ic, uint32_t round_index,
                         const std::vector<uint32_t>& receiver_demands,
                         const std::vector<CMatrix>& channels) {
    if (round_index >= ic.rounds.size()) throw ArgumentError("round index out of range");
    const auto& z = ic.rounds[round_index];
    if (channels.size() != z.size())
        throw ArgumentError("need one channel matrix per served group");
    if (receiver_demands.size() != ic.receiver_count())
        throw ArgumentError("demand vector size mismatch");
    const unsigned L = ic.group_size;

    ZfRound out;
    out.precoders.reserve(z.size());
    for (size_t j = 0; j < z.size(); ++j) {
        const CMatrix& h = channels[j];
        if (h.size() != L || h[0].size() != ic.transmitters)
            throw ArgumentError("channel matrix must be L x K_T");
        CMatrix precoder(ic.transmitters, std::vector<Cplx>(L, Cplx(0, 0)));
        for (unsigned i = 0; i < L; ++i) {
            uint32_t receiver = z[j] * L + i;
            uint32_t file = receiver_demands[receiver];
            // support: the L transmitters caching the demanded file
            std::vector<uint32_t> support;
            for (uint32_t t = 0; t < ic.transmitters; ++t)
                if (std::binary_search(ic.tx_cache[t].begin(), ic.tx_cache[t].end(), file))
                    support.push_back(t);
            if (support.size() != L)
                throw ArgumentError("file " + std::to_string(file) + " cached at " +
                                    std::to_string(support.size()) + " transmitters, need L");
            CMatrix sub(L, std::vector<Cplx>(L));
            for (unsigned r = 0; r < L; ++r)
                for (unsigned c = 0; c < L; ++c) sub[r][c] = h[r][support[c]];
            std::vector<Cplx> e(L, Cplx(0, 0));
            e[i] = Cplx(1, 0);
            auto coeff = solve_square(std::move(sub), std::move(e));
            for (unsigned c = 0; c < L; ++c) precoder[support[c]][i] = coeff[c];
            out.served.push_back(receiver);
        }
        // residual of H_j A_j - I
        for (unsigned r = 0; r < L; ++r)
            for (unsigned c = 0; c < L; ++c) {
                Cplx v(0, 0);
                for (uint32_t t = 0; t < ic.transmitters; ++t) v += h[r][t] * precoder[t][c];
                if (r == c) v -= Cplx(1, 0);
                out.max_residual = std::max(out.max_residual, std::abs(v));
            }
        out.precoders.push_back(std::move(precoder));
    }
    return out;
}

ZfRound zero_force_round_seeded(const IcParams& ic, uint32_t round_index,
                                const std::vector<uint32_t>& receiver_demands, uint64_t seed) {
    const auto& z = ic.rounds.at(round_index);
    for (unsigned attempt = 0; attempt < 3; ++attempt) {
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (round_index + 1) + attempt);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<CMatrix> channels;
        channels.reserve(z.size());
        for (size_t j = 0; j < z.size(); ++j) {
            CMatrix h(ic.group_size, std::vector<Cplx>(ic.transmitters));
            for (auto& row : h)
                for (auto& v : row) v = Cplx(gauss(rng), gauss(rng));
            channels.push_back(std::move(h));
        }
        try {
            return zero_force_round(ic, round_index, receiver_demands, channels);
        } catch (const ArgumentError&) {
            if (attempt == 2) throw;
        }
    }
    throw ArgumentError("unreachable");
}

}  // namespace pgcache
