#include "pgcache/scheme_b.hpp"

#include "pgcache/errors.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace pgcache {
namespace {

void check_params(const SchemeBParams& p) {
    if (p.k < 1 || p.n < 1 || p.m < 1 || p.l < 1)
        throw ArgumentError("k, n, m, l must be positive");
    if (p.q < 2) throw ArgumentError("q must be >= 2");
    if ((p.n + p.m) * p.l > p.k)
        throw ArgumentError("need n*l + m*l <= k, got n=" + std::to_string(p.n) +
                            " m=" + std::to_string(p.m) + " l=" + std::to_string(p.l) +
                            " k=" + std::to_string(p.k));
}

// number of l-sized sets of 1-dim subspaces generating one fixed l-dim space
BigInt generating_sets_per_space(unsigned l, const BigInt& q) {
    BigInt prod = 1;
    for (unsigned i = 0; i < l; ++i) prod *= theta(l, q) - (i == 0 ? BigInt(0) : theta(i, q));
    BigInt fact = factorial(l);
    BigInt r = prod / fact;
    if (r * fact != prod) throw ArgumentError("generator count not integral (internal)");
    return r;
}

// number of ways to split a bl-sized set into an (unordered) b-set of l-blocks
BigInt block_partitions(unsigned b, unsigned l) {
    BigInt prod = 1;
    for (unsigned i = 0; i < b; ++i) prod *= binomial((b - i) * l, l);
    BigInt fact = factorial(b);
    BigInt r = prod / fact;
    if (r * fact != prod) throw ArgumentError("block partition count not integral (internal)");
    return r;
}

struct VecHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        size_t h = v.size();
        for (uint32_t x : v) h = h * 1000003u + x;
        return h;
    }
};

std::string set_label(const std::vector<Subspace>& gens, const std::vector<uint32_t>& members,
                      char prefix) {
    std::string out{prefix};
    out += "[";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) out += ",";
        out += "{" + gens[members[i]].label() + "}";
    }
    out += "]";
    return out;
}

}  // namespace

std::vector<std::vector<uint32_t>> enumerate_independent_sets(const std::vector<Subspace>& gens,
                                                              unsigned set_size, unsigned l,
                                                              uint64_t cap,
                                                              const BigInt& expected) {
    if (expected > cap)
        throw ResourceError("generator-set enumeration would produce " + expected.str() +
                                " sets, cap is " + std::to_string(cap),
                            expected.str());
    if (gens.empty()) throw ArgumentError("no generators");
    std::vector<std::vector<uint32_t>> out;
    out.reserve(static_cast<size_t>(expected));
    std::vector<uint32_t> current;
    std::vector<Subspace> sums{Subspace(gens.front().field(), gens.front().ambient_dim())};

    // depth-first extension by independent generators, indices increasing
    auto extend = [&](auto&& self, uint32_t from) -> void {
        if (current.size() == set_size) {
            out.push_back(current);
            return;
        }
        const size_t depth = current.size();  // sums may reallocate during recursion
        for (uint32_t i = from; i < gens.size(); ++i) {
            Subspace next = subspace_sum(sums[depth], gens[i]);
            if (next.dim() != sums[depth].dim() + l) continue;
            current.push_back(i);
            sums.push_back(std::move(next));
            self(self, i + 1);
            sums.pop_back();
            current.pop_back();
        }
    };
    extend(extend, 0);
    if (BigInt(out.size()) != expected)
        throw ArgumentError("generator-set enumeration count " + std::to_string(out.size()) +
                            " != closed form " + expected.str() + " (internal)");
    return out;
}

BigInt count_independent_sets(unsigned k, unsigned a, unsigned b, unsigned q) {
    if (b < 1 || a + b > k)
        throw ArgumentError("count_independent_sets needs 1 <= a+b <= k, got a=" +
                            std::to_string(a) + " b=" + std::to_string(b) +
                            " k=" + std::to_string(k));
    if (q < 2) throw ArgumentError("q must be >= 2");
    const BigInt Q(q);
    BigInt prod = 1;
    for (unsigned i = 0; i < b; ++i)
        prod *= theta(k, Q) - (a + i == 0 ? BigInt(0) : theta(a + i, Q));
    BigInt fact = factorial(b);
    BigInt r = prod / fact;
    if (r * fact != prod) throw ArgumentError("independent-set count not integral (internal)");
    return r;
}

BigInt count_generator_sets(unsigned k, unsigned fixed_dim, unsigned b, unsigned l, unsigned q) {
    if (l < 1) throw ArgumentError("l must be positive");
    if (fixed_dim + b * l > k)
        throw ArgumentError("count_generator_sets needs fixed_dim + b*l <= k");
    const BigInt Q(q);
    BigInt ones = count_independent_sets(k, fixed_dim, b * l, q);
    BigInt blocks = block_partitions(b, l);
    BigInt per = generating_sets_per_space(l, Q);
    BigInt den = pow_big(per, b);
    BigInt num = ones * blocks;
    BigInt r = num / den;
    if (r * den != num) throw ArgumentError("generator-set count not integral (internal)");
    return r;
}

SchemeReport scheme_b_params(const SchemeBParams& p) {
    check_params(p);
    SchemeReport r;
    r.users_k = count_generator_sets(p.k, 0, p.n, p.l, p.q);
    r.subfiles_f = count_generator_sets(p.k, 0, p.m, p.l, p.q);
    r.left_degree_d = count_generator_sets(p.k, p.n * p.l, p.m, p.l, p.q);
    r.transmissions_s = count_generator_sets(p.k, 0, p.n + p.m, p.l, p.q);
    r.matching_size_g = binomial(p.n + p.m, p.n);
    r.cache_fraction = 1 - Rational(r.left_degree_d, r.subfiles_f);
    r.rate = Rational(r.transmissions_s, r.subfiles_f);
    r.gain = r.matching_size_g;
    return r;
}

SchemeBBuild build_scheme_b(const SchemeBParams& p, uint64_t cap) {
    SchemeReport report = scheme_b_params(p);
    BigInt edge_count = report.users_k * report.left_degree_d;
    for (const BigInt* v : {&report.users_k, &report.subfiles_f, &report.transmissions_s, &edge_count})
        if (*v > cap)
            throw ResourceError("scheme B build size " + v->str() + " exceeds cap " +
                                    std::to_string(cap),
                                v->str());

    auto field = make_field(p.q);
    auto gens = enumerate_subspaces(p.k, p.l, field, cap);

    auto users = enumerate_independent_sets(gens, p.n, p.l, cap, report.users_k);
    auto subfiles = enumerate_independent_sets(gens, p.m, p.l, cap, report.subfiles_f);
    auto zsets = enumerate_independent_sets(gens, p.n + p.m, p.l, cap, report.transmissions_s);

    std::unordered_map<std::vector<uint32_t>, uint32_t, VecHash> user_index, subfile_index;
    for (uint32_t i = 0; i < users.size(); ++i) user_index.emplace(users[i], i);
    for (uint32_t i = 0; i < subfiles.size(); ++i) subfile_index.emplace(subfiles[i], i);

    // E(B): user X misses subfile Y iff X u Y is an independent (n+m)-set.
    // Built directly from the definition; the cover below is derived from the
    // Z-sets instead, so partition checks exercise a real property.
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(edge_count));
    for (uint32_t ui = 0; ui < users.size(); ++ui) {
        std::vector<const Subspace*> parts;
        for (uint32_t gi : users[ui]) parts.push_back(&gens[gi]);
        for (uint32_t fi = 0; fi < subfiles.size(); ++fi) {
            auto all = parts;
            bool overlap = false;
            for (uint32_t gi : subfiles[fi]) {
                if (std::find(users[ui].begin(), users[ui].end(), gi) != users[ui].end()) {
                    overlap = true;
                    break;
                }
                all.push_back(&gens[gi]);
            }
            if (!overlap && sum_dim(all) == (p.n + p.m) * p.l) edges.emplace_back(ui, fi);
        }
    }

    // C_Z = { {X, Z \ X} : X in (Z choose n) }, emitted in Z enumeration order
    MatchingCover cover;
    cover.matchings.reserve(zsets.size());
    std::vector<uint32_t> pick(p.n), rest;
    for (const auto& z : zsets) {
        std::vector<Edge> matching;
        // iterate n-subsets of z by combination odometer
        std::vector<uint32_t> comb(p.n);
        for (unsigned i = 0; i < p.n; ++i) comb[i] = i;
        const unsigned zn = p.n + p.m;
        while (true) {
            pick.clear();
            rest.clear();
            for (unsigned i = 0, c = 0; i < zn; ++i) {
                if (c < p.n && comb[c] == i) {
                    pick.push_back(z[i]);
                    ++c;
                } else {
                    rest.push_back(z[i]);
                }
            }
            matching.emplace_back(user_index.at(pick), subfile_index.at(rest));
            int i = static_cast<int>(p.n) - 1;
            while (i >= 0 && comb[i] == zn - p.n + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (unsigned j = i + 1; j < p.n; ++j) comb[j] = comb[j - 1] + 1;
        }
        std::sort(matching.begin(), matching.end());
        cover.matchings.push_back(std::move(matching));
    }

    std::vector<std::string> user_labels, subfile_labels;
    user_labels.reserve(users.size());
    for (const auto& u : users) user_labels.push_back(set_label(gens, u, 'X'));
    subfile_labels.reserve(subfiles.size());
    for (const auto& y : subfiles) subfile_labels.push_back(set_label(gens, y, 'Y'));

    CachingGraph graph(std::move(user_labels), std::move(subfile_labels), std::move(edges));
    return SchemeBBuild{std::move(graph), std::move(cover),  std::move(report), p,
                        std::move(gens),  std::move(users),  std::move(subfiles),
                        std::move(zsets)};
}

std::string SchemeBBuild::user_label(uint32_t i) const {
    return set_label(generators, users[i], 'X');
}

std::string SchemeBBuild::subfile_label(uint32_t i) const {
    return set_label(generators, subfiles[i], 'Y');
}

SchemeCReport scheme_c_params(unsigned q, const Rational& lambda) {
    if (lambda <= 0 || lambda >= 1) throw ArgumentError("lambda must be in (0,1)");
    Rational nq = lambda * q;
    if (!is_integral(nq)) throw ArgumentError("lambda*q must be integral, got " + render_ratio(nq));
    const unsigned n = static_cast<unsigned>(numerator(nq));
    if (n < 1) throw ArgumentError("lambda*q must be positive");

    SchemeCReport out;
    out.q = q;
    out.n = n;
    out.k = 2 * n;
    out.lambda = lambda;
    out.report = scheme_b_params(SchemeBParams{out.k, n, n, 1, q});
    out.f_equals_k = out.report.subfiles_f == out.report.users_k;
    out.users_limit = Rational(pow_big(BigInt(q), 2 * n * n), factorial(n));
    out.users_bound_holds = Rational(out.report.users_k) <= out.users_limit;
    out.cache_bound_holds = out.report.cache_fraction <= lambda;
    // gain >= 4^n / (2 sqrt(n)), squared to stay in integers
    out.gain_bound_holds = out.report.gain * out.report.gain * 4 * n >= pow_big(BigInt(4), 2 * n);
    return out;
}

std::vector<SymbolicTransmission> algorithm1_transcript(const SchemeBBuild& scheme,
                                                        const std::vector<uint32_t>& demands) {
    if (demands.size() != scheme.users.size())
        throw ArgumentError("demand vector covers " + std::to_string(demands.size()) +
                            " users, scheme has " + std::to_string(scheme.users.size()));
    std::vector<SymbolicTransmission> out;
    out.reserve(scheme.cover.matchings.size());
    for (uint32_t mi = 0; mi < scheme.cover.matchings.size(); ++mi) {
        SymbolicTransmission tx;
        tx.matching_id = mi + 1;
        for (const auto& [u, f] : scheme.cover.matchings[mi])
            tx.terms.push_back({u, demands[u], f});
        out.push_back(std::move(tx));
    }
    return out;
}

std::vector<PlanCandidate> plan_parameters(const BigInt& users_wanted,
                                           const Rational& cache_fraction_available,
                                           const PlanGrid& grid, size_t max_results) {
    if (users_wanted < 1) throw ArgumentError("need at least one user");
    if (cache_fraction_available <= 0 || cache_fraction_available >= 1)
        throw ArgumentError("cache fraction must be in (0,1)");
    std::vector<PlanCandidate> found;
    for (unsigned q : grid.qs)
        for (unsigned k = 2; k <= grid.max_k; ++k)
            for (unsigned l = 1; l <= grid.max_l; ++l)
                for (unsigned n = 1; n * l < k; ++n)
                    for (unsigned m = 1; (n + m) * l <= k; ++m) {
                        SchemeBParams p{k, n, m, l, q};
                        SchemeReport r = scheme_b_params(p);
                        if (r.users_k < users_wanted) continue;
                        if (r.cache_fraction > cache_fraction_available) continue;
                        found.push_back(PlanCandidate{p, std::move(r),
                                                      BigInt(0),  // filled below
                                                      Rational(0)});
                        found.back().user_excess = found.back().report.users_k - users_wanted;
                        found.back().cache_slack =
                            cache_fraction_available - found.back().report.cache_fraction;
                    }
    std::sort(found.begin(), found.end(), [](const PlanCandidate& a, const PlanCandidate& b) {
        if (a.user_excess != b.user_excess) return a.user_excess < b.user_excess;
        if (a.cache_slack != b.cache_slack) return a.cache_slack < b.cache_slack;
        auto ta = std::array<unsigned, 5>{a.params.q, a.params.k, a.params.n, a.params.m, a.params.l};
        auto tb = std::array<unsigned, 5>{b.params.q, b.params.k, b.params.n, b.params.m, b.params.l};
        return ta < tb;
    });
    if (found.size() > max_results) found.resize(max_results);
    return found;
}

}  // namespace pgcache
