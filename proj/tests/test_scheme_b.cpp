#include "pgcache/scheme_b.hpp"

#include "pgcache/errors.hpp"

#include <doctest.h>

#include <set>

#include "oracles.hpp"

using namespace pgcache;

TEST_CASE("independent-set counts") {
    CHECK(count_independent_sets(3, 0, 2, 2) == 21);  // |Y| of the worked example
    CHECK(count_independent_sets(3, 0, 3, 2) == 28);  // |Z|
    // corollary: extensions of a hyperplane to the full space number q^{a-1}
    for (unsigned q : {2u, 3u, 5u})
        for (unsigned a = 2; a <= 5; ++a)
            CHECK(count_independent_sets(a, a - 1, 1, q) == pow_big(BigInt(q), a - 1));
    CHECK_THROWS_AS(count_independent_sets(3, 2, 2, 2), ArgumentError);  // a + b > k
}

TEST_CASE("closed forms") {
    SchemeReport r = scheme_b_params({3, 1, 2, 1, 2});
    CHECK(r.users_k == 7);
    CHECK(r.subfiles_f == 21);
    CHECK(r.cache_fraction == Rational(9, 21));
    CHECK(r.rate == Rational(28, 21));
    CHECK(r.gain == 3);

    r = scheme_b_params({4, 2, 1, 1, 2});
    CHECK(r.users_k == 105);
    CHECK(r.subfiles_f == 15);
    CHECK(r.cache_fraction == Rational(1, 5));
    CHECK(r.gain == 3);

    r = scheme_b_params({5, 2, 2, 1, 2});
    CHECK(r.users_k == 465);
    CHECK(r.subfiles_f == 465);
    CHECK(r.cache_fraction == Rational(43, 155));
    CHECK(r.gain == 6);

    CHECK_THROWS_AS(scheme_b_params({3, 2, 2, 1, 2}), ArgumentError);   // n + m > k
    CHECK_THROWS_AS(scheme_b_params({3, 1, 1, 2, 2}), ArgumentError);   // (n+m)l > k
    CHECK_THROWS_AS(scheme_b_params({4, 2, 0, 1, 2}), ArgumentError);   // empty generator sets
}

TEST_CASE("the k=3 instance reproduces the worked example") {
    auto s = build_scheme_b({3, 1, 2, 1, 2});
    oracle::F23Fixture fx;  // fx.v doubles as the T_1..T_7 of the second example

    SchemeReport verified = verify_cover(s.graph, s.cover);
    CHECK(verified.transmissions_s == 28);
    CHECK(verified.matching_size_g == 3);
    CHECK(verified.rate == Rational(28, 21));

    // generator index of each printed T_i
    auto gen_idx = [&](const Subspace& t) {
        return static_cast<uint32_t>(
            std::find(s.generators.begin(), s.generators.end(), t) - s.generators.begin());
    };
    uint32_t t[8];
    for (int i = 1; i <= 7; ++i) t[i] = gen_idx(fx.v[i - 1]);

    // user {T_1} caches exactly the nine printed subfile indices
    uint32_t u1 = UINT32_MAX;
    for (uint32_t i = 0; i < s.users.size(); ++i)
        if (s.users[i] == std::vector<uint32_t>{t[1]}) u1 = i;
    REQUIRE(u1 != UINT32_MAX);

    std::set<std::set<uint32_t>> expected;
    for (int j = 2; j <= 7; ++j) expected.insert({t[1], t[static_cast<uint32_t>(j)]});
    expected.insert({t[2], t[6]});
    expected.insert({t[3], t[5]});
    expected.insert({t[4], t[7]});

    std::set<std::set<uint32_t>> cached;
    for (uint32_t f = 0; f < s.subfiles.size(); ++f)
        if (!s.graph.has_edge(u1, f))
            cached.insert(std::set<uint32_t>(s.subfiles[f].begin(), s.subfiles[f].end()));
    CHECK(cached == expected);
    CHECK(cached.size() == 9);
}

TEST_CASE("the (4,1,1,1,2) instance") {
    SchemeReport r = scheme_b_params({4, 1, 1, 1, 2});
    CHECK(r.users_k == 15);
    CHECK(r.subfiles_f == 15);
    CHECK(r.left_degree_d == 14);  // q [3 1]
    CHECK(r.transmissions_s == 105);
    CHECK(r.matching_size_g == 2);
    auto s = build_scheme_b({4, 1, 1, 1, 2});
    CHECK_NOTHROW(verify_cover(s.graph, s.cover));
}

TEST_CASE("enumeration equals the closed forms, including the generalized scheme") {
    // build_scheme_b already cross-checks the enumerated |X|, |Y|, |Z|
    // against the formulas and verify_cover rechecks the rest
    for (SchemeBParams p :
         {SchemeBParams{3, 1, 2, 1, 2}, SchemeBParams{4, 2, 1, 1, 2}, SchemeBParams{4, 1, 2, 1, 2},
          SchemeBParams{3, 1, 1, 1, 3}, SchemeBParams{4, 1, 1, 1, 3}, SchemeBParams{4, 1, 1, 2, 2},
          SchemeBParams{5, 1, 1, 2, 2}, SchemeBParams{6, 2, 1, 1, 2}}) {
        auto s = build_scheme_b(p);
        SchemeReport expect = scheme_b_params(p);
        SchemeReport got = verify_cover(s.graph, s.cover);
        CHECK(got.left_degree_d == expect.left_degree_d);
        CHECK(got.transmissions_s == expect.transmissions_s);
        CHECK(got.matching_size_g == expect.matching_size_g);
        CHECK(got.rate == expect.rate);

        // bi-regular; for l = 1 the right degree has the printed closed form
        auto [left, right] = verify_biregular(s.graph);
        CHECK(right == count_generator_sets(p.k, p.m * p.l, p.n, p.l, p.q));
        if (p.l == 1) {
            BigInt printed = pow_big(BigInt(p.q), p.n * p.m) *
                             pow_big(BigInt(p.q), p.n * (p.n - 1) / 2);
            for (unsigned i = 0; i < p.n; ++i) printed *= theta(p.k - p.m - i, p.q);
            printed /= factorial(p.n);
            CHECK(right == printed);
        }
    }
}

TEST_CASE("set counts match a brute-force oracle over subspace combinations") {
    // independent of the library's DFS: walk plain index combinations of the
    // enumerated generators and measure each candidate's span by point-set
    // closure, counting those whose span has the full expected size
    auto count_by_closure = [](unsigned k, unsigned b, unsigned l, unsigned q) {
        auto field = make_field(q);
        auto gens = enumerate_subspaces(k, l, field);
        std::vector<std::vector<oracle::Vec>> gen_rows;
        for (const auto& g : gens) {
            std::vector<oracle::Vec> rows;
            for (unsigned i = 0; i < g.dim(); ++i) rows.emplace_back(g.row(i).begin(), g.row(i).end());
            gen_rows.push_back(std::move(rows));
        }
        size_t full = 1;
        for (unsigned i = 0; i < b * l; ++i) full *= q;
        size_t count = 0;
        std::vector<uint32_t> comb(b);
        for (unsigned i = 0; i < b; ++i) comb[i] = i;
        while (true) {
            std::vector<oracle::Vec> all;
            for (uint32_t idx : comb)
                all.insert(all.end(), gen_rows[idx].begin(), gen_rows[idx].end());
            if (oracle::span_points(*field, k, all).size() == full) ++count;
            int i = static_cast<int>(b) - 1;
            while (i >= 0 && comb[i] == gens.size() - b + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (unsigned j = i + 1; j < b; ++j) comb[j] = comb[j - 1] + 1;
        }
        return BigInt(count);
    };

    for (unsigned q : {2u, 3u}) {
        CHECK(count_by_closure(3, 2, 1, q) == count_independent_sets(3, 0, 2, q));
        CHECK(count_by_closure(3, 3, 1, q) == count_independent_sets(3, 0, 3, q));
        CHECK(count_by_closure(4, 2, 1, q) == count_independent_sets(4, 0, 2, q));
        CHECK(count_by_closure(4, 2, 2, q) == count_generator_sets(4, 0, 2, 2, q));
    }
    CHECK(count_by_closure(4, 3, 1, 2) == count_independent_sets(4, 0, 3, 2));
    CHECK(count_by_closure(5, 2, 2, 2) == count_generator_sets(5, 0, 2, 2, 2));
}

TEST_CASE("the l = 1 generalized formulas collapse to the plain ones") {
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned k = 2; k <= 6; ++k)
            for (unsigned a = 0; a + 1 <= k; ++a)
                for (unsigned b = 1; a + b <= k; ++b)
                    CHECK(count_generator_sets(k, a, b, 1, q) ==
                          count_independent_sets(k, a, b, q));
}

TEST_CASE("scheme C") {
    SchemeCReport c = scheme_c_params(2, Rational(1, 2));
    CHECK(c.n == 1);
    CHECK(c.k == 2);
    CHECK(c.report.users_k == 3);
    CHECK(c.report.subfiles_f == 3);
    CHECK(c.report.cache_fraction == Rational(1, 3));
    CHECK(c.report.gain == 2);
    CHECK(c.f_equals_k);
    CHECK(c.users_bound_holds);
    CHECK(c.cache_bound_holds);
    CHECK(c.gain_bound_holds);

    c = scheme_c_params(4, Rational(1, 2));
    CHECK(c.n == 2);
    CHECK(c.report.users_k == 3570);
    CHECK(c.f_equals_k);
    CHECK(c.users_bound_holds);
    CHECK(c.cache_bound_holds);
    CHECK(c.gain_bound_holds);

    CHECK_THROWS_AS(scheme_c_params(3, Rational(1, 2)), ArgumentError);  // lambda q = 3/2
    CHECK_THROWS_AS(scheme_c_params(2, Rational(1)), ArgumentError);     // lambda not in (0,1)
}

TEST_CASE("scheme C inequalities across the grid") {
    for (auto [q, lam] : std::vector<std::pair<unsigned, Rational>>{{2, Rational(1, 2)},
                                                                    {4, Rational(1, 4)},
                                                                    {4, Rational(1, 2)},
                                                                    {5, Rational(1, 5)},
                                                                    {5, Rational(2, 5)}}) {
        SchemeCReport c = scheme_c_params(q, lam);
        CHECK(c.f_equals_k);
        CHECK(c.users_bound_holds);
        CHECK(c.cache_bound_holds);
        CHECK(c.gain_bound_holds);
    }
}

TEST_CASE("delivery transcript symbols") {
    auto s = build_scheme_b({3, 1, 2, 1, 2});
    std::vector<uint32_t> demands(s.users.size());
    for (uint32_t i = 0; i < demands.size(); ++i) demands[i] = i;
    auto txs = algorithm1_transcript(s, demands);
    REQUIRE(txs.size() == 28);
    for (const auto& tx : txs) {
        REQUIRE(tx.terms.size() == 3);
        // every term pairs a user inside Z with the complementary subfile
        const auto& z = s.matchings[tx.matching_id - 1];
        for (const auto& term : tx.terms) {
            CHECK(term.file == demands[term.user]);
            std::set<uint32_t> zs(z.begin(), z.end());
            for (uint32_t gi : s.users[term.user]) CHECK(zs.count(gi) == 1);
            for (uint32_t gi : s.subfiles[term.subfile]) CHECK(zs.count(gi) == 1);
            CHECK(s.users[term.user].size() + s.subfiles[term.subfile].size() == zs.size());
        }
    }

    auto big = build_scheme_b({4, 2, 1, 1, 2});
    std::vector<uint32_t> d2(big.users.size(), 0);
    CHECK(algorithm1_transcript(big, d2).size() == 420);

    CHECK_THROWS_AS(algorithm1_transcript(s, std::vector<uint32_t>{1, 2}), ArgumentError);
}

TEST_CASE("parameter planning") {
    auto candidates = plan_parameters(100, Rational(1, 5));
    REQUIRE(!candidates.empty());
    bool found = false;
    for (const auto& c : candidates)
        if (c.params.k == 4 && c.params.n == 2 && c.params.m == 1 && c.params.l == 1 &&
            c.params.q == 2) {
            found = true;
            CHECK(c.report.users_k == 105);
            CHECK(c.user_excess == 5);
        }
    CHECK(found);
    for (const auto& c : candidates) {
        CHECK(c.report.users_k >= 100);
        CHECK(c.report.cache_fraction <= Rational(1, 5));
    }
    // ranked by user excess first
    for (size_t i = 1; i < candidates.size(); ++i)
        CHECK(candidates[i - 1].user_excess <= candidates[i].user_excess);
}
