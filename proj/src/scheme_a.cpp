#include "pgcache/scheme_a.hpp"

#include "pgcache/errors.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace pgcache {
namespace {

void check_params(const SchemeAParams& p) {
    if (p.k < 1 || p.m < 1 || p.t < 1) throw ArgumentError("k, m, t must be positive");
    if (p.m + p.t > p.k)
        throw ArgumentError("need m + t <= k, got m=" + std::to_string(p.m) +
                            " t=" + std::to_string(p.t) + " k=" + std::to_string(p.k));
}

// Kuhn's augmenting-path matching with deterministic vertex order.
class BipartiteMatcher {
public:
    BipartiteMatcher(size_t left, size_t right) : adj_(left), match_right_(right, kNone) {}

    void add_edge(uint32_t l, uint32_t r) { adj_[l].push_back(r); }

    // returns match for every left vertex, or throws if no perfect matching
    std::vector<uint32_t> solve() {
        std::vector<uint32_t> match_left(adj_.size(), kNone);
        for (uint32_t l = 0; l < adj_.size(); ++l) {
            seen_.assign(match_right_.size(), false);
            if (!augment(l, match_left))
                throw ArgumentError("no perfect matching (internal: contradicts regularity)");
        }
        return match_left;
    }

private:
    static constexpr uint32_t kNone = UINT32_MAX;
    std::vector<std::vector<uint32_t>> adj_;
    std::vector<uint32_t> match_right_;
    std::vector<bool> seen_;

    bool augment(uint32_t l, std::vector<uint32_t>& match_left) {
        for (uint32_t r : adj_[l]) {
            if (seen_[r]) continue;
            seen_[r] = true;
            if (match_right_[r] == kNone || augment(match_right_[r], match_left)) {
                match_right_[r] = l;
                match_left[l] = r;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

SchemeReport scheme_a_params(const SchemeAParams& p) {
    check_params(p);
    const BigInt q(p.q);
    if (p.q < 2) throw ArgumentError("q must be >= 2");
    SchemeReport r;
    r.users_k = gaussian_binomial(p.k, p.t, q);
    r.subfiles_f = gaussian_binomial(p.k, p.m + p.t, q);
    r.left_degree_d = gaussian_binomial(p.k - p.t, p.m, q);
    r.transmissions_s = gaussian_binomial(p.k, p.m, q);
    r.matching_size_g = gaussian_binomial(p.k - p.m, p.t, q);
    r.cache_fraction = 1 - Rational(r.left_degree_d, r.subfiles_f);
    r.rate = Rational(r.transmissions_s, r.subfiles_f);
    r.gain = r.matching_size_g;
    return r;
}

std::vector<std::pair<Subspace, Subspace>> matching_subspaces(const Subspace& x, unsigned m,
                                                              unsigned t) {
    if (x.dim() != m + t)
        throw ArgumentError("matching_subspaces needs dim(x) = m + t, got dim=" +
                            std::to_string(x.dim()));
    auto t_subs = subspaces_of(x, t);
    auto m_subs = subspaces_of(x, m);
    if (t_subs.size() != m_subs.size())
        throw ArgumentError("side counts differ (internal, violates duality)");

    BipartiteMatcher matcher(t_subs.size(), m_subs.size());
    for (uint32_t i = 0; i < t_subs.size(); ++i)
        for (uint32_t j = 0; j < m_subs.size(); ++j)
            if (sum_dim({&t_subs[i], &m_subs[j]}) == m + t) matcher.add_edge(i, j);
    auto match = matcher.solve();

    std::vector<std::pair<Subspace, Subspace>> out;
    out.reserve(t_subs.size());
    for (uint32_t i = 0; i < t_subs.size(); ++i) out.emplace_back(t_subs[i], m_subs[match[i]]);
    return out;
}

SchemeABuild build_scheme_a(const SchemeAParams& p, uint64_t cap) {
    SchemeReport report = scheme_a_params(p);
    if (report.users_k > cap || report.subfiles_f > cap)
        throw ResourceError("scheme A (" + std::to_string(p.k) + "," + std::to_string(p.m) + "," +
                                std::to_string(p.t) + ",q=" + std::to_string(p.q) + ") has K=" +
                                report.users_k.str() + " F=" + report.subfiles_f.str() +
                                ", cap is " + std::to_string(cap),
                            (report.users_k > cap ? report.users_k : report.subfiles_f).str());
    BigInt edge_count = report.users_k * report.left_degree_d;
    if (edge_count > cap)
        throw ResourceError("scheme A edge count " + edge_count.str() + " exceeds cap " +
                                std::to_string(cap),
                            edge_count.str());

    auto field = make_field(p.q);
    auto users = enumerate_subspaces(p.k, p.t, field, cap);
    auto subfiles = enumerate_subspaces(p.k, p.m + p.t, field, cap);
    auto classes = enumerate_subspaces(p.k, p.m, field, cap);

    std::unordered_map<Subspace, uint32_t, SubspaceHash> user_index, class_index;
    for (uint32_t i = 0; i < users.size(); ++i) user_index.emplace(users[i], i);
    for (uint32_t i = 0; i < classes.size(); ++i) class_index.emplace(classes[i], i);

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(edge_count));
    // per class, edges keyed by user index so each matching comes out in
    // enumeration order of V
    std::vector<std::map<uint32_t, uint32_t>> class_edges(classes.size());

    for (uint32_t fi = 0; fi < subfiles.size(); ++fi) {
        auto pairs = matching_subspaces(subfiles[fi], p.m, p.t);
        for (const auto& [v, tm] : pairs) {
            uint32_t ui = user_index.at(v);
            edges.emplace_back(ui, fi);
            uint32_t ci = class_index.at(tm);
            if (!class_edges[ci].emplace(ui, fi).second)
                throw ArgumentError("duplicate alternate label (internal, violates uniqueness)");
        }
    }

    std::vector<std::string> user_labels, subfile_labels;
    user_labels.reserve(users.size());
    for (const auto& s : users) user_labels.push_back("V[" + s.label() + "]");
    subfile_labels.reserve(subfiles.size());
    for (const auto& s : subfiles) subfile_labels.push_back("X[" + s.label() + "]");

    CachingGraph graph(std::move(user_labels), std::move(subfile_labels), std::move(edges));
    MatchingCover cover;
    cover.matchings.reserve(classes.size());
    for (const auto& ce : class_edges) {
        std::vector<Edge> m;
        m.reserve(ce.size());
        for (auto [u, f] : ce) m.emplace_back(u, f);
        cover.matchings.push_back(std::move(m));
    }

    return SchemeABuild{std::move(graph), std::move(cover), std::move(report), std::move(users),
                        std::move(subfiles), std::move(classes)};
}

}  // namespace pgcache
