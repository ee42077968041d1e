#include "schur/krovi.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "schur/recoupling.hpp"

namespace schur {

PreprocessResult preprocess(const Ditstring& x) {
  std::vector<int> sorted(x);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> values, counts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1) throw std::invalid_argument("preprocess: symbols start at 1");
    if (i == 0 || sorted[i] != sorted[i - 1]) {
      values.push_back(sorted[i]);
      counts.push_back(0);
    }
    ++counts.back();
  }
  PreprocessResult r;
  r.p = AlphabetMap(values);
  r.mu = Composition(counts);
  r.t = sorting_permutation(x);
  const GroupAlgebraElement cv = coset_vector(x);
  for (const auto& [g, amp] : cv.terms()) r.support.push_back(g);
  return r;
}

int VBlock::column(const GTPattern& m) const {
  auto it = column_of.find(m);
  if (it == column_of.end()) throw std::invalid_argument("pattern " + m.str() + " is not a column of this V block");
  return it->second;
}

std::vector<GTPattern> compressed_patterns(const Partition& shape, const Composition& mu) {
  if (shape.size() != mu.size()) throw std::invalid_argument("shape and composition sizes differ");
  if (shape.length() > mu.length()) return {};
  return enumerate_gt(shape, Weight(mu.parts()));
}

double v_entry(const Partition& shape, const Composition& mu, const StandardTableau& t, const GTPattern& m) {
  if (t.shape() != shape) throw std::invalid_argument("v_entry: tableau shape differs from " + shape.str());
  if (m.depth() != mu.length() || m.shape() != shape || gt_weight(m).entries() != mu.parts() || !m.valid())
    throw std::invalid_argument("v_entry: pattern " + m.str() + " does not have weight mu and top row " + shape.str());
  const std::vector<Partition> chain = t.chain();
  const std::vector<int>& word = t.word();
  for (int k = 1; k <= mu.length(); ++k)
    if (chain[mu.prefix(k)] != m.level(k)) return 0.0;
  double v = 1.0;
  for (int k = 1; k <= mu.length(); ++k) {
    const int start = mu.prefix(k - 1);
    const Partition nu = m.level(k);
    for (int j = 1; j <= mu(k) - 1; ++j) {
      const int step = start + j;  // the box added at this step lands in row word[step-1]
      v *= f_left(mu(k) - j + 1, chain[step - 1], nu, word[step - 1]);
      if (v == 0.0) return 0.0;
    }
  }
  return v;
}

VBlock v_block(const Partition& shape, const Composition& mu) {
  VBlock b;
  b.shape = shape;
  b.mu = mu;
  b.columns = compressed_patterns(shape, mu);
  for (int c = 0; c < b.kostka(); ++c) b.column_of.emplace(b.columns[c], c);
  const IrrepData& irrep = irrep_table(shape.size()).irrep(shape);
  b.matrix = RealMatrix::Zero(irrep.dim(), b.kostka());
  for (int r = 0; r < irrep.dim(); ++r)
    for (int c = 0; c < b.kostka(); ++c) b.matrix(r, c) = v_entry(shape, mu, irrep.basis[r], b.columns[c]);
  return b;
}

std::shared_ptr<const VBlock> cached_v_block(const Partition& shape, const Composition& mu) {
  static std::mutex mtx;
  static std::map<std::pair<Partition, Composition>, std::shared_ptr<const VBlock>> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({shape, mu});
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const VBlock>(v_block(shape, mu));
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(std::make_pair(shape, mu), built).first->second;
}

namespace {

struct RowInfo {
  int shape;
  int tableau;
  int v_column;  // column of the compressed pattern in V_{shape, mu}
};

std::vector<RowInfo> describe_rows(const SchurIndex& idx, const WeightBlock& b, const Composition& mu,
                                   std::vector<std::shared_ptr<const VBlock>>& vblocks) {
  vblocks.assign(idx.shapes().size(), nullptr);
  std::vector<RowInfo> rows;
  rows.reserve(b.rows.size());
  for (std::size_t flat : b.rows) {
    const SchurIndex::Label lab = idx.locate(flat);
    if (!vblocks[lab.shape]) vblocks[lab.shape] = cached_v_block(idx.shapes()[lab.shape], mu);
    const GTPattern small = compress_gt(idx.gt(lab.shape).patterns[lab.pattern]).first;
    rows.push_back({lab.shape, lab.tableau, vblocks[lab.shape]->column(small)});
  }
  return rows;
}

}  // namespace

SchurTransform schur_unitary_krovi(int n, int d, std::size_t cap) {
  require_within_cap(checked_dimension(n, d), cap, "schur_unitary_krovi");
  SchurTransform u(n, d);
  const SchurIndex& idx = u.index();
  const double nfact = static_cast<double>(factorial(n));
  for (WeightBlock& b : u.blocks()) {
    const Composition mu = b.weight.split().first;
    double ysize = 1.0;
    for (int part : mu.parts()) ysize *= static_cast<double>(factorial(part));
    std::vector<std::shared_ptr<const VBlock>> vblocks;
    const std::vector<RowInfo> rows = describe_rows(idx, b, mu, vblocks);
    std::vector<double> scale(idx.shapes().size());
    for (std::size_t s = 0; s < scale.size(); ++s) scale[s] = std::sqrt(idx.irrep(static_cast<int>(s)).dim() * ysize / nfact);
    std::vector<RealMatrix> moved(idx.shapes().size());
    for (std::size_t c = 0; c < b.cols.size(); ++c) {
      const Permutation t = sorting_permutation(string_at(b.cols[c], n, d));
      for (std::size_t s = 0; s < vblocks.size(); ++s) {
        if (!vblocks[s]) continue;
        moved[s] = vblocks[s]->matrix;
        apply_irrep_left(idx.irrep(static_cast<int>(s)), t, moved[s]);
      }
      for (std::size_t r = 0; r < rows.size(); ++r)
        b.block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            scale[rows[r].shape] * moved[rows[r].shape](rows[r].tableau, rows[r].v_column);
    }
  }
  return u;
}

SchurTransform schur_unitary_krovi_staged(int n, int d, int qft_cap) {
  const ComplexMatrix qft = qft_matrix(n, qft_cap);
  SchurTransform u(n, d);
  const SchurIndex& idx = u.index();
  const IrrepTable& table = irrep_table(n);
  // row offset of each shape inside the QFT output (all shapes of n)
  std::vector<Eigen::Index> qft_offset;
  Eigen::Index off = 0;
  for (const IrrepData& irrep : table.irreps()) {
    qft_offset.push_back(off);
    off += static_cast<Eigen::Index>(irrep.dim()) * irrep.dim();
  }
  for (WeightBlock& b : u.blocks()) {
    const Composition mu = b.weight.split().first;
    std::vector<std::shared_ptr<const VBlock>> vblocks;
    const std::vector<RowInfo> rows = describe_rows(idx, b, mu, vblocks);
    std::vector<ComplexMatrix> projector(idx.shapes().size());
    for (std::size_t s = 0; s < vblocks.size(); ++s)
      if (vblocks[s]) projector[s] = young_projector(idx.shapes()[s], mu);
    for (std::size_t c = 0; c < b.cols.size(); ++c) {
      const ComplexVector reg = qft * coset_vector(string_at(b.cols[c], n, d)).to_vector();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const int s = rows[r].shape;
        const int dl = idx.irrep(s).dim();
        const Eigen::Index base = qft_offset[table.shape_index(idx.shapes()[s])] + static_cast<Eigen::Index>(rows[r].tableau) * dl;
        const ComplexVector tpart = projector[s] * reg.segment(base, dl);
        cplx acc = 0.0;
        for (int tt = 0; tt < dl; ++tt) acc += vblocks[s]->matrix(tt, rows[r].v_column) * tpart(tt);
        b.block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
      }
    }
  }
  return u;
}

}  // namespace schur
