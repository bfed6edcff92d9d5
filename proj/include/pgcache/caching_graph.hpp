#pragma once

#include "pgcache/numeric.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pgcache {

using Edge = std::pair<uint32_t, uint32_t>;  // (user index, subfile index)

/// Bipartite caching graph B(K,F,D): users on the left, subfiles on the
/// right, an edge marking a subfile the user does NOT cache.
class CachingGraph {
public:
    CachingGraph(std::vector<std::string> users, std::vector<std::string> subfiles,
                 std::vector<Edge> edges);

    uint32_t num_users() const { return static_cast<uint32_t>(users_.size()); }
    uint32_t num_subfiles() const { return static_cast<uint32_t>(subfiles_.size()); }
    const std::vector<std::string>& users() const { return users_; }
    const std::vector<std::string>& subfiles() const { return subfiles_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted, unique

    bool has_edge(uint32_t user, uint32_t subfile) const { return adj_[user][subfile]; }
    /// Missing-subfile bitmap of one user (bit f set = edge = not cached).
    const boost::dynamic_bitset<>& neighborhood(uint32_t user) const { return adj_[user]; }
    uint32_t degree(uint32_t user) const { return static_cast<uint32_t>(adj_[user].count()); }
    uint32_t subfile_degree(uint32_t subfile) const { return right_degree_[subfile]; }

private:
    std::vector<std::string> users_, subfiles_;
    std::vector<Edge> edges_;
    std::vector<boost::dynamic_bitset<>> adj_;  // per-user bitmap for O(1) cross-edge tests
    std::vector<uint32_t> right_degree_;
};

/// A partition of E(B) into equal-size induced matchings; class i drives
/// coded transmission i.
struct MatchingCover {
    std::vector<std::vector<Edge>> matchings;
};

/// Exact-rational summary of a verified (graph, cover) pair.
struct SchemeReport {
    BigInt users_k;
    BigInt subfiles_f;
    BigInt left_degree_d;
    BigInt transmissions_s;
    BigInt matching_size_g;
    Rational cache_fraction;  // M/N = 1 - D/F
    Rational rate;            // S/F
    BigInt gain;              // K(1 - M/N)/rate, integral for equal-size covers

    std::string one_line() const;
};

/// Common user degree D; throws StructuralError naming two offending users
/// when degrees differ.
BigInt verify_left_regular(const CachingGraph& g);

/// (left degree, right degree); throws when either side is irregular.
std::pair<BigInt, BigInt> verify_biregular(const CachingGraph& g);

/// Full Definition-2 check: every class is an induced matching, classes have
/// equal size, and they partition E(B) exactly.  Returns the SchemeReport.
SchemeReport verify_cover(const CachingGraph& g, const MatchingCover& c);

/// JSON export/import of a scheme (graph + cover) with string labels.
std::string scheme_to_json(const CachingGraph& g, const MatchingCover& c);
void write_scheme_json(const CachingGraph& g, const MatchingCover& c, std::ostream& os);
std::pair<CachingGraph, MatchingCover> read_scheme_json(std::istream& is);

}  // namespace pgcache
