// Seeded randomized properties: subspace algebra against the point-set
// oracle, and cover verification on arbitrary left-regular graphs.

#include "pgcache/caching_graph.hpp"
#include "pgcache/errors.hpp"
#include "pgcache/subspace.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace pgcache;

namespace {

Subspace random_subspace(std::mt19937_64& rng, const FieldPtr& field, unsigned k,
                         unsigned max_gens) {
    std::uniform_int_distribution<unsigned> coord(0, field->q() - 1);
    std::uniform_int_distribution<unsigned> count(0, max_gens);
    std::vector<std::vector<unsigned>> gens(count(rng), std::vector<unsigned>(k));
    for (auto& g : gens)
        for (auto& c : g) c = coord(rng);
    return Subspace::span(field, k, gens);
}

}  // namespace

TEST_CASE("random spans agree with the point-set oracle") {
    std::mt19937_64 rng(0xC0FFEE);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        auto field = make_field(q);
        const unsigned k = (q <= 3) ? 4 : 3;
        for (int trial = 0; trial < 40; ++trial) {
            Subspace a = random_subspace(rng, field, k, 3);
            Subspace b = random_subspace(rng, field, k, 3);
            auto pa = oracle::points_of(a), pb = oracle::points_of(b);

            // dimension counts the points: |a| = q^dim
            size_t expect = 1;
            for (unsigned i = 0; i < a.dim(); ++i) expect *= q;
            CHECK(pa.size() == expect);

            // sum is the closure of the union
            Subspace s = subspace_sum(a, b);
            std::vector<oracle::Vec> both(pa.begin(), pa.end());
            both.insert(both.end(), pb.begin(), pb.end());
            CHECK(oracle::points_of(s) == oracle::span_points(*field, k, both));

            // containment is point-set inclusion
            CHECK(s.contains(a));
            CHECK(s.contains(b));
            bool subset = std::includes(pb.begin(), pb.end(), pa.begin(), pa.end());
            CHECK(b.contains(a) == subset);

            // canonicalization is idempotent
            std::vector<std::vector<unsigned>> rows;
            for (unsigned i = 0; i < s.dim(); ++i)
                rows.emplace_back(s.row(i).begin(), s.row(i).end());
            CHECK(Subspace::span(field, k, rows) == s);
        }
    }
}

TEST_CASE("random left-regular graphs with singleton covers always verify") {
    std::mt19937_64 rng(0xBADC0DE);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<uint32_t> users_d(1, 8), subs_d(2, 9);
        uint32_t users = users_d(rng), subfiles = subs_d(rng);
        std::uniform_int_distribution<uint32_t> deg_d(1, subfiles);
        uint32_t degree = deg_d(rng);

        std::vector<Edge> edges;
        std::vector<uint32_t> pool(subfiles);
        for (uint32_t f = 0; f < subfiles; ++f) pool[f] = f;
        for (uint32_t u = 0; u < users; ++u) {
            std::shuffle(pool.begin(), pool.end(), rng);
            for (uint32_t i = 0; i < degree; ++i) edges.emplace_back(u, pool[i]);
        }
        std::vector<std::string> ulabels, flabels;
        for (uint32_t u = 0; u < users; ++u) ulabels.push_back("u" + std::to_string(u));
        for (uint32_t f = 0; f < subfiles; ++f) flabels.push_back("f" + std::to_string(f));
        CachingGraph g(std::move(ulabels), std::move(flabels), std::move(edges));

        MatchingCover c;
        for (const Edge& e : g.edges()) c.matchings.push_back({e});
        SchemeReport r = verify_cover(g, c);
        CHECK(r.matching_size_g == 1);
        CHECK(r.gain == 1);
        CHECK(r.transmissions_s * r.matching_size_g == r.users_k * r.left_degree_d);

        // JSON round-trip preserves the report
        std::stringstream ss;
        write_scheme_json(g, c, ss);
        auto [g2, c2] = read_scheme_json(ss);
        SchemeReport r2 = verify_cover(g2, c2);
        CHECK(r2.rate == r.rate);
        CHECK(r2.left_degree_d == r.left_degree_d);
    }
}

TEST_CASE("every illegal edge pairing is caught, every legal one is not") {
    // pairing two edges that share a vertex or admit a cross edge must fail
    // the matching/induced checks; a genuinely induced pair must only fail
    // the later size-uniformity check against the padding singletons
    std::vector<Edge> edges{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 3}, {1, 4},
                            {2, 1}, {2, 2}, {2, 4}, {3, 2}, {3, 3}, {3, 4}};
    CachingGraph g({"1", "2", "3", "4"}, {"f1", "f2", "f3", "f4", "f5"}, std::move(edges));

    int violations = 0, valid = 0;
    for (size_t i = 0; i < g.edges().size(); ++i)
        for (size_t j = i + 1; j < g.edges().size(); ++j) {
            Edge a = g.edges()[i], b = g.edges()[j];
            MatchingCover c;
            c.matchings.push_back({a, b});
            for (const Edge& e : g.edges())
                if (!(e == a) && !(e == b)) c.matchings.push_back({e});
            // pad the singleton classes so only the pair's legality decides
            bool expect_ok = a.first != b.first && a.second != b.second &&
                             !g.has_edge(a.first, b.second) && !g.has_edge(b.first, a.second);
            if (expect_ok) {
                // sizes differ (2 vs 1), so a SizeMismatch is the only failure
                try {
                    verify_cover(g, c);
                    FAIL("size mismatch expected");
                } catch (const StructuralError& e) {
                    CHECK(e.kind == StructuralError::Kind::SizeMismatch);
                }
                ++valid;
            } else {
                try {
                    verify_cover(g, c);
                    FAIL("matching/induced violation expected");
                } catch (const StructuralError& e) {
                    CHECK((e.kind == StructuralError::Kind::NotAMatching ||
                           e.kind == StructuralError::Kind::NotInduced));
                }
                ++violations;
            }
        }
    CHECK(valid > 0);
    CHECK(violations > 0);
}
