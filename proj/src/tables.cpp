#include "schur/tables.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "schur/krovi.hpp"
#include "schur/recoupling.hpp"
#include "schur/symrep.hpp"

namespace schur {

std::vector<TableRow> kostka_rows(int n) {
  std::vector<TableRow> rows;
  const std::vector<Partition> shapes = enumerate_partitions(n, std::max(n, 1));
  for (const Partition& shape : shapes)
    for (const Partition& mu : shapes)
      rows.push_back({{"kind", "kostka"}, {"shape", shape.parts()}, {"mu", mu.parts()},
                      {"value", kostka(shape, Composition(mu.parts()))}});
  return rows;
}

std::vector<TableRow> fsymbol_rows(const Partition& base, const Partition& nu) {
  const int k = nu.size() - base.size();
  std::vector<TableRow> rows;
  for (int a : addable_rows(base, base.length() + 1))
    rows.push_back({{"kind", "fsymbol"}, {"family", "left"}, {"k", k}, {"base", base.parts()}, {"nu", nu.parts()},
                    {"row", a}, {"channel", base.add_box(a).parts()}, {"value", f_left(k, base, nu, a)}});
  for (int r : removable_rows(nu))
    rows.push_back({{"kind", "fsymbol"}, {"family", "right"}, {"k", k}, {"base", base.parts()}, {"nu", nu.parts()},
                    {"row", r}, {"channel", nu.remove_box(r).parts()}, {"value", f_right(k, base, nu, r)}});
  return rows;
}

std::vector<TableRow> rw_rows(const std::vector<int>& top, const std::vector<int>& mid) {
  std::vector<TableRow> rows;
  const int d = static_cast<int>(top.size());
  for (int i = 1; i <= d; ++i)
    for (int j = 0; j < d; ++j)
      rows.push_back({{"kind", "rw"}, {"top", top}, {"mid", mid}, {"i", i}, {"j", j}, {"value", rw_entry(top, mid, i, j)}});
  return rows;
}

std::vector<TableRow> ventry_rows(const Partition& shape, const Composition& mu,
                                  const std::optional<StandardTableau>& tableau,
                                  const std::optional<GTPattern>& pattern) {
  std::vector<StandardTableau> tabs;
  if (tableau)
    tabs.push_back(*tableau);
  else
    tabs = irrep_table(shape.size()).irrep(shape).basis;
  std::vector<GTPattern> pats;
  if (pattern) {
    GTPattern small = *pattern;
    if (small.depth() != mu.length()) small = compress_gt(small).first;
    pats.push_back(small);
  } else {
    pats = compressed_patterns(shape, mu);
  }
  std::vector<TableRow> rows;
  for (const StandardTableau& t : tabs)
    for (const GTPattern& m : pats)
      rows.push_back({{"kind", "ventry"}, {"shape", shape.parts()}, {"mu", mu.parts()}, {"tableau", t.word()},
                      {"pattern", m.rows()}, {"value", v_entry(shape, mu, t, m)}});
  return rows;
}

void write_table(std::ostream& os, const std::vector<TableRow>& rows) {
  for (const TableRow& r : rows) os << r.dump() << '\n';
  if (!os) throw std::runtime_error("failed writing table");
}

std::vector<TableRow> read_table(std::istream& is) {
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) rows.push_back(nlohmann::json::parse(line));
  return rows;
}

}  // namespace schur
