#include "pgcache/bounds.hpp"

#include "pgcache/errors.hpp"
#include "pgcache/scheme_a.hpp"
#include "pgcache/scheme_b.hpp"
#include "pgcache/tables.hpp"

#include <doctest.h>

using namespace pgcache;

namespace {

CachingGraph fig2_graph() {
    std::vector<Edge> edges{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 3}, {1, 4},
                            {2, 1}, {2, 2}, {2, 4}, {3, 2}, {3, 3}, {3, 4}};
    return CachingGraph({"1", "2", "3", "4"}, {"f1", "f2", "f3", "f4", "f5"}, std::move(edges));
}

}  // namespace

TEST_CASE("nested-neighborhood bound on the running example") {
    CachingGraph g = fig2_graph();
    // the ordering used in the lower-bound example: users 1, 3, 2, 4
    CHECK(mais_bound(g, {0, 2, 1, 3}) == 6);  // rho = (3, 2, 1, 0)
    CHECK(mais_bound(g, {0}) == 3);           // single user: D
    CHECK(mais_exhaustive(g) == 6);           // optimal, matching the achieved 6/5
    CHECK(mais_bound(g, greedy_ordering(g)) == 6);
    CHECK_THROWS_AS(mais_bound(g, {0, 0}), ArgumentError);
}

TEST_CASE("exhaustive search on the first scheme instance") {
    auto s = build_scheme_a({3, 1, 1, 2});
    // two distinct users pin the unique 2-dim subspace containing both, so
    // rho = (3, 1, 1, 0, ...): the exhaustive optimum is 5 < S = 7
    CHECK(mais_exhaustive(s.graph) == 5);
    CHECK(mais_bound(s.graph, greedy_ordering(s.graph)) == 5);
    // any 2-prefix reaches 3 + 1
    for (uint32_t second = 1; second < 7; ++second)
        CHECK(mais_bound(s.graph, {0, second}) == 4);
}

TEST_CASE("corollary bound") {
    CHECK(bound_corollary2(7, 21, Rational(9, 21)) == Rational(15, 21));
    CHECK(bound_corollary2(15, 105, Rational(1, 5)) == Rational(95, 105));
    // degenerate full cache: the formula itself goes negative
    CHECK(bound_corollary2(4, 8, Rational(1)) == Rational(-1, 8));
    CHECK_THROWS_AS(bound_corollary2(7, 20, Rational(9, 21)), ArgumentError);
}

TEST_CASE("bi-regular recursion bound") {
    CHECK(bound_theorem6(7, 21, Rational(9, 21)) == Rational(22, 21));  // rho = 12,6,3,1
    CHECK(bound_theorem6(15, 105, Rational(1, 5)) == Rational(325, 105));
    // d = 1: the single term D/F = 1 - M/N
    CHECK(bound_theorem6(2, 4, Rational(1, 2)) == Rational(1, 2));
    CHECK_THROWS_AS(bound_theorem6(8001, 9921240, 1 - Rational(6666081, 9921240)),
                    ArgumentError);  // d not integral
}

TEST_CASE("nested-ceiling PDA bound") {
    CHECK(bound_cheng(7, 21, Rational(9, 21)) == Rational(18, 21));
    CHECK(bound_cheng(15, 105, Rational(1, 5)) == Rational(234, 105));
    // D = 1: single term ceil(K/F)/F
    CHECK(bound_cheng(3, 2, Rational(1, 2)) == Rational(2, 2));
}

TEST_CASE("cut-set style bound") {
    CHECK(bound_wtp(7, Rational(9, 21)) == 1);
    CHECK(bound_wtp(9, Rational(0)) == 9);
    CHECK(bound_wtp(465, Rational(130, 465)) == Rational(335, 131));  // 2.5573 at 4 decimals
    CHECK(to_decimal(bound_wtp(465, Rational(130, 465)), 4) == "2.5573");
}

TEST_CASE("comparison-table rows") {
    auto rows = table8_report(table8_rows());
    REQUIRE(rows.size() == 14);
    // spot values, frozen from the recursions by hand
    CHECK(rows[0].theorem6 == Rational(71, 50));
    CHECK(rows[1].theorem6 == Rational(109, 54));
    CHECK(rows[3].cheng == Rational(18, 21));
    CHECK(to_decimal(rows[5].theorem6, 4) == "3.0952");
    CHECK(to_decimal(rows[11].theorem6, 4) == "4.5548");
    // dominance across the whole table
    for (const auto& r : rows) CHECK(r.theorem6 >= r.corollary2);
    // the rows tied to constructions carry the achieved rate
    CHECK(rows[3].achieved == Rational(28, 21));
    CHECK(rows[4].achieved == Rational(3));
    CHECK(!rows[0].achieved);
    // the inconsistent printed rows get flagged, not silently adjusted
    CHECK(!rows[12].note.empty());
    CHECK(!rows[13].note.empty());
}

TEST_CASE("greedy realizes at least the closed-form recursion") {
    auto s = build_scheme_b({3, 1, 2, 1, 2});
    BigInt greedy = mais_bound(s.graph, greedy_ordering(s.graph));
    CHECK(greedy >= 22);  // the bound_theorem6 recursion total for (7, 21, 9/21)
    Rational t6 = bound_theorem6(7, 21, Rational(9, 21));
    CHECK(Rational(greedy, 21) >= t6);
}

TEST_CASE("bound soundness against constructed schemes") {
    struct Inst {
        SchemeReport report;
        CachingGraph graph;
    };
    std::vector<Inst> instances;
    for (SchemeAParams p : {SchemeAParams{3, 1, 1, 2}, SchemeAParams{4, 1, 1, 2}}) {
        auto s = build_scheme_a(p);
        instances.push_back({s.report, std::move(s.graph)});
    }
    for (SchemeBParams p : {SchemeBParams{3, 1, 2, 1, 2}, SchemeBParams{4, 2, 1, 1, 2}}) {
        auto s = build_scheme_b(p);
        instances.push_back({s.report, std::move(s.graph)});
    }
    for (const auto& inst : instances) {
        const auto& r = inst.report;
        CHECK(bound_corollary2(r.users_k, r.subfiles_f, r.cache_fraction) <= r.rate);
        Rational t6 = bound_theorem6(r.users_k, r.subfiles_f, r.cache_fraction);
        CHECK(t6 <= r.rate);
        CHECK(bound_corollary2(r.users_k, r.subfiles_f, r.cache_fraction) <= t6);
        CHECK(bound_wtp(r.users_k, r.cache_fraction) <= r.rate);
        // a valid ordering's bound never exceeds the achieved transmissions
        BigInt greedy = mais_bound(inst.graph, greedy_ordering(inst.graph));
        CHECK(greedy <= r.transmissions_s);
        // ... and the greedy realization dominates the pigeonhole floor
        CHECK(Rational(greedy, r.subfiles_f) >= t6);
    }
}
