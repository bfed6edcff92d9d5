#pragma once

#include "pgcache/caching_graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace pgcache {

/// F x K placement delivery array.  Cell value 0 encodes the star, values
/// 1..S are delivery slots.
struct Pda {
    uint32_t rows = 0;  // F
    uint32_t cols = 0;  // K
    std::vector<uint32_t> cells;

    uint32_t at(uint32_t row, uint32_t col) const { return cells[size_t(row) * cols + col]; }
    uint32_t& at(uint32_t row, uint32_t col) { return cells[size_t(row) * cols + col]; }
};

struct PdaParams {
    uint32_t k = 0, f = 0, z = 0, s = 0;
    std::optional<uint32_t> g;  // present iff every integer occurs equally often
};

/// Checks conditions C1-C3 and returns (K, F, Z, S, g?).  Violations throw
/// StructuralError with the offending cell coordinates (1-based).
PdaParams validate_pda(const Pda& p);

/// A verified cover with matchings of size g >= 2 becomes a g-regular
/// (K, F, Z=F-D, S) PDA: stars mark cached cells, integers the matching that
/// delivers the cell.  Conversion always re-verifies the cover first.
Pda cover_to_pda(const CachingGraph& g, const MatchingCover& c);

/// CSV: header line `#PDA K=.. F=.. Z=.. S=.. g=<g|->`, then F rows of K
/// comma-separated cells, `*` for stars.
void write_pda_csv(const Pda& p, std::ostream& os);
Pda read_pda_csv(std::istream& is);

}  // namespace pgcache
