#include "pgcache/subspace.hpp"

#include "pgcache/errors.hpp"

#include <algorithm>
#include <functional>

namespace pgcache {
namespace {

// In-place RREF over F_q; returns rank.  Rows are length `width`.
unsigned rref(std::vector<std::vector<uint16_t>>& rows, unsigned width, const FiniteField& f) {
    unsigned rank = 0;
    for (unsigned col = 0; col < width && rank < rows.size(); ++col) {
        unsigned pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        unsigned inv = f.inv(rows[rank][col]);
        if (inv != 1)
            for (unsigned j = col; j < width; ++j) rows[rank][j] = static_cast<uint16_t>(f.mul(rows[rank][j], inv));
        for (unsigned r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            unsigned factor = rows[r][col];
            for (unsigned j = 0; j < width; ++j) {
                unsigned sub = f.mul(factor, rows[rank][j]);
                rows[r][j] = static_cast<uint16_t>(f.sub(rows[r][j], sub));
            }
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

}  // namespace

Subspace::Subspace(FieldPtr field, unsigned ambient_dim)
    : field_(std::move(field)), ambient_(ambient_dim) {}

Subspace Subspace::span(FieldPtr field, unsigned ambient_dim,
                        const std::vector<std::vector<unsigned>>& generators) {
    std::vector<std::vector<uint16_t>> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.size() != ambient_dim)
            throw ArgumentError("generator length " + std::to_string(g.size()) +
                                " != ambient dimension " + std::to_string(ambient_dim));
        std::vector<uint16_t> r(ambient_dim);
        for (unsigned j = 0; j < ambient_dim; ++j) {
            if (g[j] >= field->q()) throw ArgumentError("coordinate out of field range");
            r[j] = static_cast<uint16_t>(g[j]);
        }
        rows.push_back(std::move(r));
    }
    unsigned rank = rref(rows, ambient_dim, *field);
    Subspace s(std::move(field), ambient_dim);
    s.dim_ = rank;
    s.rows_.reserve(size_t(rank) * ambient_dim);
    for (const auto& r : rows) s.rows_.insert(s.rows_.end(), r.begin(), r.end());
    return s;
}

Subspace Subspace::from_rref(FieldPtr field, unsigned ambient_dim, unsigned dim,
                             std::vector<uint16_t> rows) {
    Subspace s(std::move(field), ambient_dim);
    s.dim_ = dim;
    s.rows_ = std::move(rows);
    return s;
}

bool Subspace::contains_vector(std::span<const uint16_t> v) const {
    const FiniteField& f = *field_;
    std::vector<uint16_t> work(v.begin(), v.end());
    for (unsigned i = 0; i < dim_; ++i) {
        auto br = row(i);
        unsigned pivot = 0;
        while (pivot < ambient_ && br[pivot] == 0) ++pivot;
        if (pivot == ambient_ || work[pivot] == 0) continue;
        unsigned factor = work[pivot];
        for (unsigned j = pivot; j < ambient_; ++j)
            work[j] = static_cast<uint16_t>(f.sub(work[j], f.mul(factor, br[j])));
    }
    return std::all_of(work.begin(), work.end(), [](uint16_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& inner) const {
    if (ambient_ != inner.ambient_) throw ArgumentError("ambient dimension mismatch");
    if (inner.dim_ > dim_) return false;
    for (unsigned i = 0; i < inner.dim_; ++i)
        if (!contains_vector(inner.row(i))) return false;
    return true;
}

std::string Subspace::label() const {
    const bool wide = field_->q() > 10;
    std::string out;
    for (unsigned i = 0; i < dim_; ++i) {
        if (i) out += '|';
        for (unsigned j = 0; j < ambient_; ++j) {
            if (wide && j) out += ',';
            out += std::to_string(row(i)[j]);
        }
    }
    if (dim_ == 0) out = "0";
    return out;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
    if (auto c = ambient_ <=> o.ambient_; c != 0) return c;
    if (auto c = dim_ <=> o.dim_; c != 0) return c;
    return std::lexicographical_compare_three_way(rows_.begin(), rows_.end(), o.rows_.begin(),
                                                  o.rows_.end());
}

size_t Subspace::hash() const {
    size_t h = std::hash<unsigned>{}(dim_ * 131u + ambient_);
    for (uint16_t v : rows_) h = h * 1000003u + v;
    return h;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || !(*a.field() == *b.field()))
        throw ArgumentError("subspace sum requires a common ambient space");
    std::vector<std::vector<unsigned>> gens;
    gens.reserve(a.dim() + b.dim());
    for (unsigned i = 0; i < a.dim(); ++i) gens.emplace_back(a.row(i).begin(), a.row(i).end());
    for (unsigned i = 0; i < b.dim(); ++i) gens.emplace_back(b.row(i).begin(), b.row(i).end());
    return Subspace::span(a.field(), a.ambient_dim(), gens);
}

unsigned sum_dim(const std::vector<const Subspace*>& parts) {
    if (parts.empty()) return 0;
    const auto& first = *parts.front();
    std::vector<std::vector<uint16_t>> rows;
    for (const Subspace* s : parts)
        for (unsigned i = 0; i < s->dim(); ++i) rows.emplace_back(s->row(i).begin(), s->row(i).end());
    return rref(rows, first.ambient_dim(), *first.field());
}

BigInt gaussian_binomial(unsigned k, unsigned m, const BigInt& q) {
    if (q < 2) throw ArgumentError("gaussian binomial needs q >= 2");
    if (m > k) throw ArgumentError("gaussian binomial needs m <= k, got m=" + std::to_string(m) +
                                   " k=" + std::to_string(k));
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < m; ++i) {
        num *= pow_big(q, k - i) - 1;
        den *= pow_big(q, m - i) - 1;
    }
    BigInt r = num / den;
    if (r * den != num) throw ArgumentError("gaussian binomial not integral (internal)");
    return r;
}

BigInt theta(unsigned k, const BigInt& q) {
    if (k < 1) throw ArgumentError("theta needs k >= 1");
    return (pow_big(q, k) - 1) / (q - 1);
}

GbEnvelopes gb_bounds(unsigned a, unsigned b, unsigned f, unsigned q) {
    if (q < 2) throw ArgumentError("gb_bounds needs q >= 2");
    const BigInt Q(q);
    const int ai = static_cast<int>(a), bi = static_cast<int>(b), fi = static_cast<int>(f);
    const int dlt = std::abs(bi - fi);
    GbEnvelopes e;
    e.lower_gb = pow_big(Q, (ai - bi) * bi);
    e.upper_gb = pow_big(Q, (ai - bi + 1) * bi);
    e.lower_ratio_top = pow_big(Q, (ai - fi - 1) * bi);
    e.upper_ratio_top = pow_big(Q, (ai - fi + 1) * bi);
    e.lower_ratio_bottom = pow_big(Q, (ai - fi - bi - 1) * dlt);
    e.upper_ratio_bottom = pow_big(Q, (ai - fi - bi + 1) * dlt);
    return e;
}

std::vector<Subspace> enumerate_subspaces(unsigned k, unsigned d, const FieldPtr& field,
                                          uint64_t cap) {
    if (d > k) throw ArgumentError("subspace dimension exceeds ambient: d=" + std::to_string(d));
    const BigInt count = gaussian_binomial(k, d, field->q());
    if (count > cap)
        throw ResourceError("enumerate_subspaces(" + std::to_string(k) + "," + std::to_string(d) +
                                ",q=" + std::to_string(field->q()) + ") would produce " +
                                count.str() + " subspaces, cap is " + std::to_string(cap),
                            count.str());

    std::vector<Subspace> out;
    out.reserve(static_cast<size_t>(count));
    if (d == 0) {
        out.emplace_back(field, k);
        return out;
    }

    const unsigned q = field->q();
    // one RREF shape per pivot-column combination; remaining entries free
    std::vector<unsigned> pivots(d);
    for (unsigned i = 0; i < d; ++i) pivots[i] = i;
    while (true) {
        // free positions: (row i, col j) with j > pivots[i] and j not a pivot column
        std::vector<std::pair<unsigned, unsigned>> free_pos;
        std::vector<bool> is_pivot(k, false);
        for (unsigned c : pivots) is_pivot[c] = true;
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = pivots[i] + 1; j < k; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        std::vector<uint16_t> mat(size_t(d) * k, 0);
        for (unsigned i = 0; i < d; ++i) mat[size_t(i) * k + pivots[i]] = 1;
        std::vector<unsigned> odo(free_pos.size(), 0);
        while (true) {
            for (size_t t = 0; t < free_pos.size(); ++t)
                mat[size_t(free_pos[t].first) * k + free_pos[t].second] =
                    static_cast<uint16_t>(odo[t]);
            out.push_back(Subspace::from_rref(field, k, d, mat));
            size_t t = 0;
            while (t < odo.size() && ++odo[t] == q) odo[t++] = 0;
            if (t == odo.size()) break;
        }

        // next pivot combination
        int i = static_cast<int>(d) - 1;
        while (i >= 0 && pivots[i] == k - d + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (unsigned j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }

    std::sort(out.begin(), out.end());
    if (BigInt(out.size()) != count)
        throw ArgumentError("subspace enumeration miscounted (internal)");
    return out;
}

std::vector<Subspace> subspaces_of(const Subspace& x, unsigned d, uint64_t cap) {
    const auto& field = x.field();
    const FiniteField& f = *field;
    const unsigned inner_k = x.dim(), k = x.ambient_dim();
    auto rel = enumerate_subspaces(inner_k, d, field, cap);
    std::vector<Subspace> out;
    out.reserve(rel.size());
    for (const auto& r : rel) {
        // lift: rows of r are coordinates w.r.t. x's basis
        std::vector<std::vector<uint16_t>> rows(d, std::vector<uint16_t>(k, 0));
        for (unsigned i = 0; i < d; ++i)
            for (unsigned c = 0; c < inner_k; ++c) {
                unsigned coeff = r.row(i)[c];
                if (coeff == 0) continue;
                auto xb = x.row(c);
                for (unsigned j = 0; j < k; ++j)
                    rows[i][j] = static_cast<uint16_t>(f.add(rows[i][j], f.mul(coeff, xb[j])));
            }
        unsigned rank = rref(rows, k, f);
        std::vector<uint16_t> flat;
        flat.reserve(size_t(rank) * k);
        for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
        out.push_back(Subspace::from_rref(field, k, rank, std::move(flat)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pgcache
