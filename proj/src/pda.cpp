#include "pgcache/pda.hpp"

#include "pgcache/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace pgcache {

using Kind = StructuralError::Kind;

namespace {
std::string cell_name(uint32_t row, uint32_t col) {
    return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}
}  // namespace

PdaParams validate_pda(const Pda& p) {
    if (p.rows == 0 || p.cols == 0 || p.cells.size() != size_t(p.rows) * p.cols)
        throw ArgumentError("malformed PDA array");

    uint32_t s = 0;
    for (uint32_t v : p.cells) s = std::max(s, v);
    if (s == 0)
        throw StructuralError(Kind::PdaC2, "C2: the array contains no integer at all");

    // C1: equal star count per column
    uint32_t z = 0;
    for (uint32_t j = 0; j < p.rows; ++j)
        if (p.at(j, 0) == 0) ++z;
    for (uint32_t k = 1; k < p.cols; ++k) {
        uint32_t zk = 0;
        for (uint32_t j = 0; j < p.rows; ++j)
            if (p.at(j, k) == 0) ++zk;
        if (zk != z)
            throw StructuralError(Kind::PdaC1, "C1: column 1 has " + std::to_string(z) +
                                                   " stars, column " + std::to_string(k + 1) +
                                                   " has " + std::to_string(zk));
    }

    // C2 + occurrence lists
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> where(s + 1);
    for (uint32_t j = 0; j < p.rows; ++j)
        for (uint32_t k = 0; k < p.cols; ++k)
            if (uint32_t v = p.at(j, k); v != 0) where[v].emplace_back(j, k);
    for (uint32_t v = 1; v <= s; ++v)
        if (where[v].empty())
            throw StructuralError(Kind::PdaC2, "C2: integer " + std::to_string(v) +
                                                   " never occurs (max integer is " +
                                                   std::to_string(s) + ")");

    // C3
    for (uint32_t v = 1; v <= s; ++v) {
        const auto& occ = where[v];
        for (size_t a = 0; a < occ.size(); ++a)
            for (size_t b = a + 1; b < occ.size(); ++b) {
                auto [j1, k1] = occ[a];
                auto [j2, k2] = occ[b];
                if (j1 == j2 || k1 == k2)
                    throw StructuralError(Kind::PdaC3,
                                          "C3: integer " + std::to_string(v) + " at " +
                                              cell_name(j1, k1) + " and " + cell_name(j2, k2) +
                                              " shares a row or column");
                if (p.at(j1, k2) != 0)
                    throw StructuralError(Kind::PdaC3, "C3: crossing cell " + cell_name(j1, k2) +
                                                           " of integer " + std::to_string(v) +
                                                           " is not a star");
                if (p.at(j2, k1) != 0)
                    throw StructuralError(Kind::PdaC3, "C3: crossing cell " + cell_name(j2, k1) +
                                                           " of integer " + std::to_string(v) +
                                                           " is not a star");
            }
    }

    PdaParams out{p.cols, p.rows, z, s, std::nullopt};
    const size_t g0 = where[1].size();
    if (std::all_of(where.begin() + 1, where.end(),
                    [&](const auto& occ) { return occ.size() == g0; }))
        out.g = static_cast<uint32_t>(g0);
    return out;
}

Pda cover_to_pda(const CachingGraph& g, const MatchingCover& c) {
    SchemeReport report = verify_cover(g, c);  // conversion never trusts its input
    if (report.matching_size_g < 2)
        throw ArgumentError("PDA conversion needs matchings of size g >= 2, got g=" +
                            report.matching_size_g.str());

    Pda p;
    p.rows = g.num_subfiles();
    p.cols = g.num_users();
    p.cells.assign(size_t(p.rows) * p.cols, 0);
    for (uint32_t mi = 0; mi < c.matchings.size(); ++mi)
        for (const auto& [u, f] : c.matchings[mi]) p.at(f, u) = mi + 1;
    return p;
}

void write_pda_csv(const Pda& p, std::ostream& os) {
    PdaParams params = validate_pda(p);
    os << "#PDA K=" << params.k << " F=" << params.f << " Z=" << params.z << " S=" << params.s
       << " g=" << (params.g ? std::to_string(*params.g) : std::string("-")) << "\n";
    for (uint32_t j = 0; j < p.rows; ++j) {
        for (uint32_t k = 0; k < p.cols; ++k) {
            if (k) os << ",";
            if (p.at(j, k) == 0)
                os << "*";
            else
                os << p.at(j, k);
        }
        os << "\n";
    }
}

Pda read_pda_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("#PDA", 0) != 0)
        throw ArgumentError("missing #PDA header");
    Pda p;
    std::vector<uint32_t> cells;
    uint32_t cols = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        uint32_t n = 0;
        while (std::getline(ss, tok, ',')) {
            cells.push_back(tok == "*" ? 0 : static_cast<uint32_t>(std::stoul(tok)));
            ++n;
        }
        if (cols == 0)
            cols = n;
        else if (n != cols)
            throw ArgumentError("ragged PDA row");
        ++p.rows;
    }
    p.cols = cols;
    p.cells = std::move(cells);
    return p;
}

}  // namespace pgcache
