#include "pgcache/bounds.hpp"

#include "pgcache/errors.hpp"
#include "pgcache/scheme_b.hpp"

#include <algorithm>
#include <unordered_set>

namespace pgcache {
namespace {

// shared nested-ceiling recursion: first term `first`, then
// factors (top - j + 1)/(bottom - j + 1) for j = 2..terms
BigInt nested_ceiling_sum(const BigInt& first, const BigInt& top, const BigInt& bottom,
                          const BigInt& terms) {
    BigInt value = first, sum = first;
    for (BigInt j = 2; j <= terms; ++j) {
        value = ceil_div((top - (j - 1)) * value, bottom - (j - 1));
        sum += value;
    }
    return sum;
}

void check_symmetric_feasible(const BigInt& users_k, const BigInt& subfiles_f, const Rational& mn,
                              bool need_right_regular) {
    if (mn < 0 || mn > 1) throw ArgumentError("cache fraction must be in [0,1]");
    Rational D = Rational(subfiles_f) * (1 - mn);
    if (!is_integral(D))
        throw ArgumentError("F(1-M/N) = " + render_ratio(D) + " not integral: no such symmetric scheme");
    if (need_right_regular) {
        Rational d = Rational(users_k) * (1 - mn);
        if (!is_integral(d))
            throw ArgumentError("K(1-M/N) = " + render_ratio(d) +
                                " not integral: no such bi-regular scheme");
    }
}

Rational theorem6_value(const BigInt& users_k, const BigInt& subfiles_f, const BigInt& big_d,
                        const BigInt& small_d) {
    if (small_d < 1) throw ArgumentError("recursion bound needs d >= 1");
    return Rational(nested_ceiling_sum(big_d, small_d, users_k, small_d), subfiles_f);
}

}  // namespace

BigInt mais_bound(const CachingGraph& g, const std::vector<uint32_t>& ordering) {
    std::unordered_set<uint32_t> seen;
    for (uint32_t u : ordering) {
        if (u >= g.num_users()) throw ArgumentError("ordering references unknown user");
        if (!seen.insert(u).second)
            throw ArgumentError("ordering repeats user '" + g.users()[u] + "'");
    }
    BigInt total = 0;
    boost::dynamic_bitset<> inter(g.num_subfiles());
    inter.set();
    for (uint32_t u : ordering) {
        inter &= g.neighborhood(u);
        total += inter.count();
    }
    return total;
}

std::vector<uint32_t> greedy_ordering(const CachingGraph& g) {
    std::vector<uint32_t> order;
    std::vector<bool> used(g.num_users(), false);
    boost::dynamic_bitset<> inter(g.num_subfiles());
    inter.set();
    while (order.size() < g.num_users()) {
        uint32_t best = UINT32_MAX;
        size_t best_count = 0;
        for (uint32_t u = 0; u < g.num_users(); ++u) {
            if (used[u]) continue;
            size_t c = (inter & g.neighborhood(u)).count();
            if (c > best_count) {
                best_count = c;
                best = u;
            }
        }
        if (best == UINT32_MAX) break;  // any further rho_j would be 0
        order.push_back(best);
        used[best] = true;
        inter &= g.neighborhood(best);
    }
    return order;
}

BigInt mais_exhaustive(const CachingGraph& g) {
    if (g.num_users() > 10)
        throw ArgumentError("exhaustive ordering search is limited to K <= 10, got K=" +
                            std::to_string(g.num_users()));
    BigInt best = 0;
    std::vector<bool> used(g.num_users(), false);
    auto dfs = [&](auto&& self, const boost::dynamic_bitset<>& inter, const BigInt& sum) -> void {
        if (sum > best) best = sum;
        if (inter.none()) return;  // rho stays 0 from here on
        for (uint32_t u = 0; u < g.num_users(); ++u) {
            if (used[u]) continue;
            auto next = inter & g.neighborhood(u);
            used[u] = true;
            self(self, next, sum + next.count());
            used[u] = false;
        }
    };
    boost::dynamic_bitset<> all(g.num_subfiles());
    all.set();
    dfs(dfs, all, 0);
    return best;
}

Rational bound_corollary2(const BigInt& users_k, const BigInt& subfiles_f, const Rational& mn) {
    check_symmetric_feasible(users_k, subfiles_f, mn, false);
    Rational d_check = Rational(users_k) * (1 - mn);
    if (!is_integral(d_check))
        throw ArgumentError("K(1-M/N) = " + render_ratio(d_check) + " not integral");
    return (Rational(users_k + subfiles_f) * (1 - mn) - 1) / Rational(subfiles_f);
}

Rational bound_theorem6(const BigInt& users_k, const BigInt& subfiles_f, const Rational& mn) {
    check_symmetric_feasible(users_k, subfiles_f, mn, true);
    BigInt big_d = numerator(Rational(subfiles_f) * (1 - mn));
    BigInt small_d = numerator(Rational(users_k) * (1 - mn));
    return theorem6_value(users_k, subfiles_f, big_d, small_d);
}

Rational bound_cheng(const BigInt& users_k, const BigInt& subfiles_f, const Rational& mn) {
    check_symmetric_feasible(users_k, subfiles_f, mn, false);
    BigInt big_d = numerator(Rational(subfiles_f) * (1 - mn));
    if (big_d < 1) throw ArgumentError("cheng bound needs D >= 1");
    BigInt first = ceil_div(big_d * users_k, subfiles_f);
    return Rational(nested_ceiling_sum(first, big_d, subfiles_f, big_d), subfiles_f);
}

Rational bound_wtp(const BigInt& users_k, const Rational& mn) {
    if (mn < 0 || mn > 1) throw ArgumentError("cache fraction must be in [0,1]");
    return Rational(users_k) * (1 - mn) / (1 + Rational(users_k) * mn);
}

std::vector<BoundRow> table8_report(const std::vector<std::array<BigInt, 3>>& rows) {
    std::vector<BoundRow> out;
    out.reserve(rows.size());
    for (const auto& [K, F, D] : rows) {
        BoundRow r;
        r.users_k = K;
        r.subfiles_f = F;
        r.left_degree_d = D;
        r.mn = 1 - Rational(D, F);
        r.corollary2 = (Rational(K + F) * (1 - r.mn) - 1) / Rational(F);
        r.wtp = bound_wtp(K, r.mn);
        r.cheng = bound_cheng(K, F, r.mn);

        Rational small_d_exact = Rational(K) * (1 - r.mn);
        if (is_integral(small_d_exact)) {
            r.theorem6 = theorem6_value(K, F, D, numerator(small_d_exact));
        } else {
            // the row cannot come from a bi-regular graph; evaluate at the
            // ceiling and say so
            BigInt d_up = ceil_div(numerator(small_d_exact), denominator(small_d_exact));
            r.theorem6 = theorem6_value(K, F, D, d_up);
            r.note = "K(1-M/N) = " + render_ratio(small_d_exact) + " not integral; used d=" +
                     d_up.str();
        }

        // achieved rate of the matching construction, when one exists
        for (unsigned q : {2u, 3u, 4u, 5u}) {
            for (unsigned k = 2; k <= 8 && !r.achieved; ++k)
                for (unsigned n = 1; n < k && !r.achieved; ++n)
                    for (unsigned m = 1; n + m <= k; ++m) {
                        SchemeBParams p{k, n, m, 1, q};
                        SchemeReport rep = scheme_b_params(p);
                        if (rep.users_k != K || rep.subfiles_f != F) continue;
                        r.achieved = rep.rate;
                        if (rep.left_degree_d != D) {
                            if (!r.note.empty()) r.note += "; ";
                            r.note += "scheme (" + std::to_string(k) + "," + std::to_string(n) +
                                      "," + std::to_string(m) + ",q=" + std::to_string(q) +
                                      ") has D=" + rep.left_degree_d.str() + ", row says D=" +
                                      D.str();
                        }
                        break;
                    }
            if (r.achieved) break;
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace pgcache
