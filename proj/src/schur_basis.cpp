#include "schur/schur_basis.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace schur {

std::size_t checked_dimension(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("need n >= 0 and d >= 1");
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    if (dim > (std::size_t{1} << 40)) throw CapExceeded("dimension d^n overflows");
    dim *= static_cast<std::size_t>(d);
  }
  return dim;
}

SchurIndex::SchurIndex(int n, int d) : n_(n), d_(d) {
  const IrrepTable& table = irrep_table(n);
  for (const IrrepData& irrep : table.irreps()) {
    if (irrep.shape.length() > d) continue;
    shapes_.push_back(irrep.shape);
    irreps_.push_back(&irrep);
    gt_.emplace_back(irrep.shape, d);
    offsets_.push_back(dim_);
    dim_ += static_cast<std::size_t>(irrep.dim()) * static_cast<std::size_t>(gt_.back().dim());
  }
  if (dim_ != checked_dimension(n, d)) throw std::logic_error("Schur-Weyl dimension count failed");
}

int SchurIndex::shape_index(const Partition& shape) const {
  for (std::size_t k = 0; k < shapes_.size(); ++k)
    if (shapes_[k] == shape) return static_cast<int>(k);
  return -1;
}

std::size_t SchurIndex::flat(int shape, int tableau, int pattern) const {
  return offsets_.at(shape) + static_cast<std::size_t>(tableau) * static_cast<std::size_t>(gt_[shape].dim()) +
         static_cast<std::size_t>(pattern);
}

SchurIndex::Label SchurIndex::locate(std::size_t flat) const {
  if (flat >= dim_) throw std::out_of_range("flat Schur index");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat);
  const int shape = static_cast<int>(it - offsets_.begin()) - 1;
  const std::size_t local = flat - offsets_[shape];
  const std::size_t m = static_cast<std::size_t>(gt_[shape].dim());
  return {shape, static_cast<int>(local / m), static_cast<int>(local % m)};
}

std::shared_ptr<const SchurIndex> schur_index(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const SchurIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_shared<const SchurIndex>(n, d);
  return slot;
}

SchurTransform::SchurTransform(int n, int d) : n_(n), d_(d), index_(schur_index(n, d)) {
  const SchurIndex& idx = *index_;
  for (const Weight& w : enumerate_weights(n, d)) {
    block_of_.emplace(w, static_cast<int>(blocks_.size()));
    WeightBlock b;
    b.weight = w;
    blocks_.push_back(std::move(b));
  }
  for (std::size_t c = 0; c < idx.dim(); ++c) blocks_[block_of_.at(string_weight(string_at(c, n, d), d))].cols.push_back(c);
  for (int s = 0; s < static_cast<int>(idx.shapes().size()); ++s) {
    const GTBasis& gt = idx.gt(s);
    std::vector<int> sector(gt.dim());
    for (int m = 0; m < gt.dim(); ++m) sector[m] = block_of_.at(gt_weight(gt.patterns[m]));
    for (int t = 0; t < idx.irrep(s).dim(); ++t)
      for (int m = 0; m < gt.dim(); ++m) blocks_[sector[m]].rows.push_back(idx.flat(s, t, m));
  }
  for (WeightBlock& b : blocks_) {
    std::sort(b.rows.begin(), b.rows.end());
    if (b.rows.size() != b.cols.size()) throw std::logic_error("weight sector is not square");
    b.block = ComplexMatrix::Zero(static_cast<Eigen::Index>(b.rows.size()), static_cast<Eigen::Index>(b.cols.size()));
  }
}

int SchurTransform::block_index(const Weight& w) const {
  auto it = block_of_.find(w);
  return it == block_of_.end() ? -1 : it->second;
}

const WeightBlock& SchurTransform::block(const Weight& w) const {
  const int b = block_index(w);
  if (b < 0) throw std::out_of_range("no weight sector for the requested weight");
  return blocks_[b];
}

ComplexMatrix SchurTransform::dense() const {
  const auto N = static_cast<Eigen::Index>(dim());
  ComplexMatrix u = ComplexMatrix::Zero(N, N);
  for (const WeightBlock& b : blocks_)
    for (std::size_t r = 0; r < b.rows.size(); ++r)
      for (std::size_t c = 0; c < b.cols.size(); ++c)
        u(static_cast<Eigen::Index>(b.rows[r]), static_cast<Eigen::Index>(b.cols[c])) = b.block(r, c);
  return u;
}

double SchurTransform::unitarity_deviation() const {
  double dev = 0.0;
  for (const WeightBlock& b : blocks_) dev = std::max(dev, schur::unitarity_deviation(b.block));
  return dev;
}

ComplexMatrix sym_target(const SchurIndex& index, int i) {
  const auto N = static_cast<Eigen::Index>(index.dim());
  ComplexMatrix t = ComplexMatrix::Zero(N, N);
  for (int s = 0; s < static_cast<int>(index.shapes().size()); ++s) {
    const IrrepData& irrep = index.irrep(s);
    RealMatrix g = RealMatrix::Identity(irrep.dim(), irrep.dim());
    apply_generator_left(irrep, i, g);
    const int m = index.gt(s).dim();
    for (int a = 0; a < irrep.dim(); ++a)
      for (int b = 0; b < irrep.dim(); ++b) {
        if (g(a, b) == 0.0) continue;
        for (int p = 0; p < m; ++p)
          t(static_cast<Eigen::Index>(index.flat(s, a, p)), static_cast<Eigen::Index>(index.flat(s, b, p))) = g(a, b);
      }
  }
  return t;
}

ComplexMatrix gl_target(const SchurIndex& index, int k, int l) {
  const auto N = static_cast<Eigen::Index>(index.dim());
  ComplexMatrix t = ComplexMatrix::Zero(N, N);
  for (int s = 0; s < static_cast<int>(index.shapes().size()); ++s) {
    const GTBasis& gt = index.gt(s);
    for (int p = 0; p < gt.dim(); ++p)
      for (const auto& [target, v] : apply_generator(gt.patterns[p], k, l)) {
        const int q = gt.index(target);
        for (int a = 0; a < index.irrep(s).dim(); ++a)
          t(static_cast<Eigen::Index>(index.flat(s, a, q)), static_cast<Eigen::Index>(index.flat(s, a, p))) += v;
      }
  }
  return t;
}

}  // namespace schur
