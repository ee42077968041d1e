#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "schur/combinat.hpp"

namespace schur {

// One JSON object per row; every row carries "kind" and "value".
using TableRow = nlohmann::json;

// K(shape, mu) for all shape, mu partitions of n.
std::vector<TableRow> kostka_rows(int n);
// Both F families for base inside nu, k = |nu| - |base|.
std::vector<TableRow> fsymbol_rows(const Partition& base, const Partition& nu);
// All (i, j) entries for one (top, mid) pair.
std::vector<TableRow> rw_rows(const std::vector<int>& top, const std::vector<int>& mid);
// V entries; a missing tableau or pattern means all of them. A full-depth
// pattern is compressed first.
std::vector<TableRow> ventry_rows(const Partition& shape, const Composition& mu,
                                  const std::optional<StandardTableau>& tableau,
                                  const std::optional<GTPattern>& pattern);

void write_table(std::ostream& os, const std::vector<TableRow>& rows);
std::vector<TableRow> read_table(std::istream& is);

}  // namespace schur
