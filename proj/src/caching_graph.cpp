#include "pgcache/caching_graph.hpp"

#include "pgcache/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pgcache {

using Kind = StructuralError::Kind;

CachingGraph::CachingGraph(std::vector<std::string> users, std::vector<std::string> subfiles,
                           std::vector<Edge> edges)
    : users_(std::move(users)), subfiles_(std::move(subfiles)), edges_(std::move(edges)) {
    if (users_.empty() || subfiles_.empty()) throw ArgumentError("graph needs users and subfiles");
    auto check_unique = [](const std::vector<std::string>& labels, const char* side) {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second)
                throw ArgumentError(std::string("duplicate ") + side + " label: " + l);
    };
    check_unique(users_, "user");
    check_unique(subfiles_, "subfile");

    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(users_.size(), boost::dynamic_bitset<>(subfiles_.size()));
    right_degree_.assign(subfiles_.size(), 0);
    for (auto [u, f] : edges_) {
        if (u >= users_.size() || f >= subfiles_.size())
            throw ArgumentError("edge index out of range: (" + std::to_string(u) + "," +
                                std::to_string(f) + ")");
        adj_[u].set(f);
        ++right_degree_[f];
    }
}

std::string SchemeReport::one_line() const {
    return "K=" + users_k.str() + " F=" + subfiles_f.str() + " D=" + left_degree_d.str() +
           " M/N=" + render_ratio(cache_fraction) + " S=" + transmissions_s.str() +
           " g=" + matching_size_g.str() + " R=" + render_ratio(rate) + " gain=" + gain.str();
}

BigInt verify_left_regular(const CachingGraph& g) {
    uint32_t d = g.degree(0);
    for (uint32_t u = 1; u < g.num_users(); ++u)
        if (g.degree(u) != d)
            throw StructuralError(Kind::Irregular,
                                  "users '" + g.users()[0] + "' and '" + g.users()[u] +
                                      "' have degrees " + std::to_string(d) + " and " +
                                      std::to_string(g.degree(u)));
    return d;
}

std::pair<BigInt, BigInt> verify_biregular(const CachingGraph& g) {
    BigInt d = verify_left_regular(g);
    uint32_t rd = g.subfile_degree(0);
    for (uint32_t f = 1; f < g.num_subfiles(); ++f)
        if (g.subfile_degree(f) != rd)
            throw StructuralError(Kind::Irregular,
                                  "subfiles '" + g.subfiles()[0] + "' and '" + g.subfiles()[f] +
                                      "' have degrees " + std::to_string(rd) + " and " +
                                      std::to_string(g.subfile_degree(f)));
    return {d, BigInt(rd)};
}

SchemeReport verify_cover(const CachingGraph& g, const MatchingCover& c) {
    const BigInt d = verify_left_regular(g);
    if (c.matchings.empty()) throw ArgumentError("empty cover");

    auto edge_name = [&](const Edge& e) {
        return "{" + g.users()[e.first] + "," + g.subfiles()[e.second] + "}";
    };

    const size_t matching_size = c.matchings.front().size();
    std::unordered_map<uint64_t, uint32_t> covered;  // edge key -> count
    covered.reserve(g.edges().size());

    for (size_t ci = 0; ci < c.matchings.size(); ++ci) {
        const auto& m = c.matchings[ci];
        if (m.size() != matching_size)
            throw StructuralError(Kind::SizeMismatch,
                                  "matching " + std::to_string(ci + 1) + " has " +
                                      std::to_string(m.size()) + " edges, expected " +
                                      std::to_string(matching_size));
        for (const Edge& e : m) {
            if (e.first >= g.num_users() || e.second >= g.num_subfiles() ||
                !g.has_edge(e.first, e.second))
                throw StructuralError(Kind::NotAnEdge, "matching " + std::to_string(ci + 1) +
                                                           " references " + edge_name(e) +
                                                           " which is not in E(B)");
            ++covered[(uint64_t(e.first) << 32) | e.second];
        }
        // matching + induced checks, per Definition 2
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = i + 1; j < m.size(); ++j) {
                const auto& [k1, f1] = m[i];
                const auto& [k2, f2] = m[j];
                if (k1 == k2 || f1 == f2)
                    throw StructuralError(Kind::NotAMatching,
                                          "matching " + std::to_string(ci + 1) + ": edges " +
                                              edge_name(m[i]) + " and " + edge_name(m[j]) +
                                              " share a vertex");
                if (g.has_edge(k1, f2))
                    throw StructuralError(Kind::NotInduced,
                                          "matching " + std::to_string(ci + 1) + ": cross edge {" +
                                              g.users()[k1] + "," + g.subfiles()[f2] +
                                              "} is in E(B)");
                if (g.has_edge(k2, f1))
                    throw StructuralError(Kind::NotInduced,
                                          "matching " + std::to_string(ci + 1) + ": cross edge {" +
                                              g.users()[k2] + "," + g.subfiles()[f1] +
                                              "} is in E(B)");
            }
    }

    for (const auto& [key, count] : covered)
        if (count > 1) {
            Edge e{uint32_t(key >> 32), uint32_t(key & 0xffffffffu)};
            throw StructuralError(Kind::Coverage, "edge " + edge_name(e) + " covered " +
                                                      std::to_string(count) + " times");
        }
    for (const Edge& e : g.edges())
        if (!covered.count((uint64_t(e.first) << 32) | e.second))
            throw StructuralError(Kind::Coverage, "edge " + edge_name(e) + " not covered");

    SchemeReport r;
    r.users_k = g.num_users();
    r.subfiles_f = g.num_subfiles();
    r.left_degree_d = d;
    r.transmissions_s = c.matchings.size();
    r.matching_size_g = matching_size;
    r.cache_fraction = 1 - Rational(d, r.subfiles_f);
    r.rate = Rational(r.transmissions_s, r.subfiles_f);
    Rational gain = Rational(r.users_k) * (1 - r.cache_fraction) / r.rate;
    if (!is_integral(gain)) throw ArgumentError("gain not integral (internal)");
    r.gain = numerator(gain);
    return r;
}

std::string scheme_to_json(const CachingGraph& g, const MatchingCover& c) {
    nlohmann::json j;
    j["users"] = g.users();
    j["subfiles"] = g.subfiles();
    auto& edges = j["missed_edges"] = nlohmann::json::array();
    for (const auto& [u, f] : g.edges())
        edges.push_back(nlohmann::json::array({g.users()[u], g.subfiles()[f]}));
    auto& cover = j["cover"] = nlohmann::json::array();
    for (const auto& m : c.matchings) {
        nlohmann::json cls = nlohmann::json::array();
        for (const auto& [u, f] : m)
            cls.push_back(nlohmann::json::array({g.users()[u], g.subfiles()[f]}));
        cover.push_back(std::move(cls));
    }
    return j.dump();
}

void write_scheme_json(const CachingGraph& g, const MatchingCover& c, std::ostream& os) {
    os << scheme_to_json(g, c) << "\n";
}

std::pair<CachingGraph, MatchingCover> read_scheme_json(std::istream& is) {
    nlohmann::json j = nlohmann::json::parse(is);
    std::vector<std::string> users = j.at("users"), subfiles = j.at("subfiles");
    std::unordered_map<std::string, uint32_t> uidx, fidx;
    for (uint32_t i = 0; i < users.size(); ++i) uidx[users[i]] = i;
    for (uint32_t i = 0; i < subfiles.size(); ++i) fidx[subfiles[i]] = i;
    auto lookup = [](auto& map, const std::string& label, const char* side) {
        auto it = map.find(label);
        if (it == map.end()) throw ArgumentError(std::string("unknown ") + side + " label: " + label);
        return it->second;
    };
    std::vector<Edge> edges;
    for (const auto& e : j.at("missed_edges"))
        edges.emplace_back(lookup(uidx, e.at(0), "user"), lookup(fidx, e.at(1), "subfile"));
    MatchingCover cover;
    for (const auto& cls : j.at("cover")) {
        std::vector<Edge> m;
        for (const auto& e : cls)
            m.emplace_back(lookup(uidx, e.at(0), "user"), lookup(fidx, e.at(1), "subfile"));
        cover.matchings.push_back(std::move(m));
    }
    return {CachingGraph(std::move(users), std::move(subfiles), std::move(edges)),
            std::move(cover)};
}

}  // namespace pgcache
