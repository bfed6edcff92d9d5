#pragma once

#include "pgcache/bounds.hpp"
#include "pgcache/extensions.hpp"
#include "pgcache/scheme_a.hpp"
#include "pgcache/scheme_b.hpp"

#include <string>
#include <vector>

namespace pgcache {

// The numerical-comparison tables.  Rows pair one of our instances with a
// reference scheme from the literature; the reference columns are computed
// from that scheme's printed closed form and labelled external.

struct TableARow {
    SchemeAParams params;
    unsigned ext_users_base, ext_groups;  // (K', l) of the grouping scheme
};
struct TableBRow {
    SchemeBParams params;
    unsigned ext_users_base, ext_groups;
};
struct TableCdcRow {
    SchemeBParams params;
    unsigned ext_nodes, ext_load;  // (K, r) of the baseline scheme
};
struct TableIcRow {
    unsigned k, m, q, L;
};

const std::vector<TableARow>& table3_rows();
const std::vector<TableBRow>& table4_rows();
const std::vector<TableCdcRow>& table6_rows();
const std::vector<TableIcRow>& table7_rows();
const std::vector<std::array<BigInt, 3>>& table8_rows();  // (K, F, D)

std::string table3_csv();
std::string table4_csv();
std::string table6_csv();
std::string table7_csv();
std::string table8_csv();

}  // namespace pgcache
