#include "schur/bch.hpp"

#include <cmath>
#include <stdexcept>

#include "schur/prepcirc.hpp"
#include "schur/recoupling.hpp"

namespace schur {

double CascadeState::norm() const {
  double s = 0.0;
  for (const auto& [key, a] : amplitudes) s += a * a;
  return std::sqrt(s);
}

const std::vector<PatternTerm>& CouplingCache::column(const GTPattern& m, int letter) {
  auto key = std::make_pair(m, letter);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(std::move(key), cg_column(m, letter)).first->second;
}

CascadeState cascade_start(int depth) {
  if (depth < 1) throw std::invalid_argument("cascade depth must be positive");
  std::vector<std::vector<int>> rows(depth);
  for (int k = 1; k <= depth; ++k) rows[k - 1].assign(k, 0);
  CascadeState s;
  s.depth = depth;
  s.amplitudes.emplace(std::make_pair(std::vector<int>{}, GTPattern(std::move(rows))), 1.0);
  return s;
}

namespace {

int grown_row(const GTPattern& before, const GTPattern& after) {
  const int d = before.depth();
  for (int i = 1; i <= d; ++i)
    if (after.at(d, i) == before.at(d, i) + 1) return i;
  throw std::logic_error("coupling target " + after.str() + " does not add a box to " + before.str());
}

}  // namespace

CascadeState cascade_step(const CascadeState& state, int letter, CouplingCache* cache) {
  if (letter < 1 || letter > state.depth) throw std::out_of_range("cascade letter outside [depth]");
  CouplingCache local;
  CouplingCache& cc = cache ? *cache : local;
  CascadeState out;
  out.step = state.step + 1;
  out.depth = state.depth;
  for (const auto& [key, amp] : state.amplitudes) {
    const auto& [word, m] = key;
    for (const auto& [target, c] : cc.column(m, letter)) {
      std::vector<int> w = word;
      w.push_back(grown_row(m, target));
      out.amplitudes[std::make_pair(std::move(w), target)] += amp * c;
    }
  }
  return out;
}

CascadeState run_cascade(const Ditstring& letters, int depth, std::vector<double>* norms, CouplingCache* cache) {
  CouplingCache local;
  CouplingCache& cc = cache ? *cache : local;
  CascadeState s = cascade_start(depth);
  if (norms) norms->assign(1, s.norm());
  for (int x : letters) {
    s = cascade_step(s, x, &cc);
    if (norms) norms->push_back(s.norm());
  }
  return s;
}

namespace {

// Writes one finished cascade into column c of its weight block.
void scatter(const CascadeState& s, const SchurIndex& idx, WeightBlock& b, std::size_t c,
             const std::map<std::size_t, Eigen::Index>& row_of, int d,
             const AlphabetMap* alphabet) {
  for (const auto& [key, amp] : s.amplitudes) {
    if (amp == 0.0) continue;
    const auto& [word, m] = key;
    GTPattern full = m;
    if (alphabet) full = decompress_gt(compress_gt(m).first, *alphabet, d);
    const int sh = idx.shape_index(full.shape());
    if (sh < 0) throw std::logic_error("cascade produced a shape outside the index: " + full.shape().str());
    const IrrepData& irrep = idx.irrep(sh);
    auto t = irrep.index_of_word.find(word);
    if (t == irrep.index_of_word.end()) throw std::logic_error("cascade produced a non-Yamanouchi word");
    const int p = idx.gt(sh).index(full);
    const std::size_t flat = idx.flat(sh, t->second, p);
    auto r = row_of.find(flat);
    if (r == row_of.end()) throw std::logic_error("cascade output lies outside the weight sector");
    b.block(r->second, static_cast<Eigen::Index>(c)) += amp;
  }
}

std::map<std::size_t, Eigen::Index> row_lookup(const WeightBlock& b) {
  std::map<std::size_t, Eigen::Index> out;
  for (std::size_t r = 0; r < b.rows.size(); ++r) out.emplace(b.rows[r], static_cast<Eigen::Index>(r));
  return out;
}

}  // namespace

SchurTransform schur_unitary_bch(int n, int d, std::size_t cap) {
  require_within_cap(checked_dimension(n, d), cap, "schur_unitary_bch");
  SchurTransform u(n, d);
  const SchurIndex& idx = u.index();
  CouplingCache cache;
  for (WeightBlock& b : u.blocks()) {
    const auto row_of = row_lookup(b);
    for (std::size_t c = 0; c < b.cols.size(); ++c) {
      const CascadeState s = run_cascade(string_at(b.cols[c], n, d), d, nullptr, &cache);
      scatter(s, idx, b, c, row_of, d, nullptr);
    }
  }
  return u;
}

SchurTransform schur_unitary_bch_highdim(int n, int d, std::size_t cap) {
  require_within_cap(checked_dimension(n, d), cap, "schur_unitary_bch_highdim");
  SchurTransform u(n, d);
  const SchurIndex& idx = u.index();
  CouplingCache cache;
  for (WeightBlock& b : u.blocks()) {
    const auto row_of = row_lookup(b);
    for (std::size_t c = 0; c < b.cols.size(); ++c) {
      const CompressedString cs = compress_string(string_at(b.cols[c], n, d));
      const AlphabetMap alphabet = cs.alphabet();
      // the cascade runs on the ranks, at depth n whatever d is
      const CascadeState s = run_cascade(cs.e, n, nullptr, &cache);
      scatter(s, idx, b, c, row_of, d, &alphabet);
    }
  }
  return u;
}

}  // namespace schur
