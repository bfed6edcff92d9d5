#include "pgcache/errors.hpp"
#include "pgcache/subspace.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace pgcache;

TEST_CASE("gaussian binomial values") {
    CHECK(gaussian_binomial(3, 1, 2) == 7);  // the seven 1-dim subspaces of F_2^3
    CHECK(gaussian_binomial(5, 0, 3) == 1);
    CHECK(gaussian_binomial(0, 0, 2) == 1);
    // frozen from the point-set oracle below
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK_THROWS_AS(gaussian_binomial(3, 4, 2), ArgumentError);
    CHECK_THROWS_AS(gaussian_binomial(3, 1, 1), ArgumentError);
}

TEST_CASE("gaussian binomial matches the brute-force point-set count") {
    for (unsigned q : {2u, 3u}) {
        auto f = make_field(q);
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned d = 0; d <= k && (q == 2 || k <= 3); ++d) {
                auto sets = oracle::all_subspace_point_sets(*f, k, d);
                CHECK(BigInt(sets.size()) == gaussian_binomial(k, d, q));
            }
    }
}

TEST_CASE("theta") {
    CHECK(theta(3, 2) == 7);
    CHECK(theta(1, 17) == 1);
    CHECK(theta(4, 3) == 40);
    CHECK(theta(4, 3) == gaussian_binomial(4, 1, 3));
}

TEST_CASE("enumeration is complete, canonical and lexicographic") {
    auto f2 = make_field(2);
    oracle::F23Fixture fx;

    auto ones = enumerate_subspaces(3, 1, f2);
    REQUIRE(ones.size() == 7);
    // same family as the worked example's V_1..V_7
    for (const auto& v : fx.v)
        CHECK(std::find(ones.begin(), ones.end(), v) != ones.end());

    auto twos = enumerate_subspaces(3, 2, f2);
    REQUIRE(twos.size() == 7);
    for (const auto& x : fx.x) {
        auto it = std::find(twos.begin(), twos.end(), x);
        REQUIRE(it != twos.end());
        CHECK(oracle::points_of(*it) == oracle::points_of(x));
    }

    CHECK(std::is_sorted(ones.begin(), ones.end()));
    CHECK(std::is_sorted(twos.begin(), twos.end()));

    auto zero = enumerate_subspaces(4, 0, f2);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].is_zero());
}

TEST_CASE("enumeration counts match the formula across the grid") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        auto f = make_field(q);
        for (unsigned k = 1; k <= 6; ++k)
            for (unsigned d = 0; d <= k; ++d) {
                BigInt expected = gaussian_binomial(k, d, q);
                if (expected > kDefaultEnumCap) {
                    CHECK_THROWS_AS(enumerate_subspaces(k, d, f), ResourceError);
                    continue;
                }
                auto subs = enumerate_subspaces(k, d, f);
                CHECK(BigInt(subs.size()) == expected);
                CHECK(std::is_sorted(subs.begin(), subs.end()));
            }
    }
}

TEST_CASE("enumeration cap fails loudly with the offending count") {
    auto f2 = make_field(2);
    try {
        enumerate_subspaces(12, 6, f2, 1000);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(BigInt(e.count) == gaussian_binomial(12, 6, 2));
    }
}

TEST_CASE("duality [k r] = [k k-r]") {
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned k = 1; k <= 6; ++k)
            for (unsigned r = 0; r <= k; ++r)
                CHECK(gaussian_binomial(k, r, q) == gaussian_binomial(k, k - r, q));
}

TEST_CASE("subspaces containing a fixed subspace are counted by [k-l r-l]") {
    for (unsigned q : {2u, 3u}) {
        auto f = make_field(q);
        for (unsigned k = 2; k <= (q == 2 ? 5u : 4u); ++k) {
            auto all_by_dim = [&](unsigned d) { return enumerate_subspaces(k, d, f); };
            for (unsigned l = 1; l < k; ++l) {
                auto fixed = all_by_dim(l).front();
                for (unsigned r = l; r <= k; ++r) {
                    size_t count = 0;
                    for (const auto& s : all_by_dim(r))
                        if (s.contains(fixed)) ++count;
                    CHECK(BigInt(count) == gaussian_binomial(k - l, r - l, q));
                }
            }
        }
    }
}

TEST_CASE("intersection profiles are counted by q^{(r-l)(s-l)} [k-s r-l] [s l]") {
    for (unsigned q : {2u, 3u}) {
        auto f = make_field(q);
        const unsigned k = 4;
        for (unsigned s_dim = 1; s_dim < k; ++s_dim) {
            auto fixed = enumerate_subspaces(k, s_dim, f).front();
            for (unsigned r = 1; r < k; ++r) {
                auto rs = enumerate_subspaces(k, r, f);
                for (unsigned l = 0; l <= std::min(r, s_dim); ++l) {
                    size_t count = 0;
                    for (const auto& cand : rs) {
                        // intersection dim = r + s - dim(r + s)
                        unsigned sum = sum_dim({&cand, &fixed});
                        if (r + s_dim - sum == l) ++count;
                    }
                    if (r - l > k - s_dim) {
                        // profile impossible: cand + fixed would exceed the ambient space
                        CHECK(count == 0);
                        continue;
                    }
                    BigInt expected = pow_big(BigInt(q), (r - l) * (s_dim - l)) *
                                      gaussian_binomial(k - s_dim, r - l, q) *
                                      gaussian_binomial(s_dim, l, q);
                    CHECK(BigInt(count) == expected);
                }
            }
        }
    }
}

TEST_CASE("subspace sum") {
    oracle::F23Fixture fx;
    // V_1 (+) T_2 = X_1 in the worked example
    CHECK(subspace_sum(fx.v[0], fx.v[1]) == fx.x[0]);
    for (const auto& s : fx.x) CHECK(subspace_sum(s, s) == s);
    // {T_1, T_2, T_6} is a dependent triple: the sum stays 2-dim
    Subspace t126 = subspace_sum(subspace_sum(fx.v[0], fx.v[1]), fx.v[5]);
    CHECK(t126.dim() == 2);

    auto f3 = make_field(3);
    Subspace a = Subspace::span(f3, 2, {{1, 0}});
    CHECK_THROWS_AS(subspace_sum(a, fx.v[0]), ArgumentError);
}

TEST_CASE("containment") {
    oracle::F23Fixture fx;
    CHECK(fx.x[0].contains(fx.v[0]));   // V_1 inside X_1
    CHECK(!fx.x[2].contains(fx.v[0]));  // V_1 not inside X_3
    Subspace zero(fx.field, 3);
    for (const auto& x : fx.x) CHECK(x.contains(zero));
    // agreement with the point-set oracle on every pair
    for (const auto& x : fx.x)
        for (const auto& v : fx.v) {
            auto xp = oracle::points_of(x);
            auto vp = oracle::points_of(v);
            bool subset = std::includes(xp.begin(), xp.end(), vp.begin(), vp.end());
            CHECK(x.contains(v) == subset);
        }
}

TEST_CASE("canonical form survives re-canonicalization") {
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = make_field(q);
        for (unsigned d = 0; d <= 3; ++d)
            for (const auto& s : enumerate_subspaces(4, d, f)) {
                std::vector<std::vector<unsigned>> gens;
                for (unsigned i = 0; i < s.dim(); ++i)
                    gens.emplace_back(s.row(i).begin(), s.row(i).end());
                // also scramble: add row sums as extra generators
                if (s.dim() >= 2) {
                    std::vector<unsigned> mixed(s.ambient_dim());
                    for (unsigned j = 0; j < s.ambient_dim(); ++j)
                        mixed[j] = f->add(s.row(0)[j], s.row(1)[j]);
                    gens.push_back(mixed);
                }
                CHECK(Subspace::span(f, 4, gens) == s);
            }
    }
}

TEST_CASE("gaussian binomial envelopes") {
    auto ge = [](const Rational& a, const Rational& b) { return a >= b; };

    // worked corners
    GbEnvelopes e = gb_bounds(3, 1, 0, 2);
    CHECK(e.lower_gb == 4);
    CHECK(e.upper_gb == 8);
    e = gb_bounds(4, 2, 0, 2);
    CHECK(e.lower_gb == 16);
    CHECK(e.upper_gb == 64);
    e = gb_bounds(4, 1, 3, 2);
    CHECK(e.lower_ratio_top == 1);
    CHECK(e.upper_ratio_top == 4);
    CHECK(ge(Rational(15, 7), e.lower_ratio_top));
    CHECK(ge(e.upper_ratio_top, Rational(15, 7)));

    // full grid, all three chains on their valid domains
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned a = 0; a <= 12; ++a)
            for (unsigned b = 0; b <= a; ++b) {
                GbEnvelopes env = gb_bounds(a, b, b, q);
                Rational gb(gaussian_binomial(a, b, q));
                CHECK(ge(gb, env.lower_gb));
                CHECK(ge(env.upper_gb, gb));
                for (unsigned f = b; f <= a; ++f) {  // [a b]/[f b]
                    env = gb_bounds(a, b, f, q);
                    Rational ratio = gb / Rational(gaussian_binomial(f, b, q));
                    CHECK(ge(ratio, env.lower_ratio_top));
                    CHECK(ge(env.upper_ratio_top, ratio));
                }
                for (unsigned f = 0; f <= b; ++f) {  // [a b]/[a f]
                    env = gb_bounds(a, b, f, q);
                    Rational ratio = gb / Rational(gaussian_binomial(a, f, q));
                    CHECK(ge(ratio, env.lower_ratio_bottom));
                    CHECK(ge(env.upper_ratio_bottom, ratio));
                }
            }
}

TEST_CASE("relative enumeration lists exactly the subspaces inside x") {
    auto f2 = make_field(2);
    oracle::F23Fixture fx;
    auto inside = subspaces_of(fx.x[0], 1);
    REQUIRE(inside.size() == 3);  // [2 1]_2
    auto pts = oracle::points_of(fx.x[0]);
    for (const auto& s : inside) {
        auto sp = oracle::points_of(s);
        CHECK(std::includes(pts.begin(), pts.end(), sp.begin(), sp.end()));
    }
    CHECK(std::is_sorted(inside.begin(), inside.end()));

    // full ambient space recovers the plain enumeration
    Subspace full = Subspace::span(f2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(subspaces_of(full, 2) == enumerate_subspaces(3, 2, f2));
}

TEST_CASE("labels") {
    oracle::F23Fixture fx;
    CHECK(fx.v[0].label() == "001");
    CHECK(fx.x[0].label() == "010|001");
    CHECK(Subspace(fx.field, 3).label() == "0");
}
