#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "schur/combinat.hpp"
#include "schur/gtmod.hpp"
#include "schur/linalg.hpp"
#include "schur/symrep.hpp"

namespace schur {

std::size_t checked_dimension(int n, int d);

// Output basis (shape, S, M) <-> flat index; S is the major index inside a
// shape block, M the minor one.
class SchurIndex {
 public:
  SchurIndex(int n, int d);

  struct Label {
    int shape = 0;    // position in shapes()
    int tableau = 0;  // position in SYT(shape)
    int pattern = 0;  // position in GT(shape, d)
  };

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Partition>& shapes() const { return shapes_; }
  const IrrepData& irrep(int shape) const { return *irreps_[shape]; }
  const GTBasis& gt(int shape) const { return gt_[shape]; }
  std::size_t offset(int shape) const { return offsets_[shape]; }
  int shape_index(const Partition& shape) const;  // -1 when absent

  std::size_t flat(int shape, int tableau, int pattern) const;
  Label locate(std::size_t flat) const;

 private:
  int n_, d_;
  std::size_t dim_ = 0;
  std::vector<Partition> shapes_;
  std::vector<const IrrepData*> irreps_;
  std::vector<GTBasis> gt_;
  std::vector<std::size_t> offsets_;
};

std::shared_ptr<const SchurIndex> schur_index(int n, int d);

// One weight sector: computational strings of weight w onto the output
// labels whose GT pattern has weight w.
struct WeightBlock {
  Weight weight;
  std::vector<std::size_t> rows;  // flat output indices, ascending
  std::vector<std::size_t> cols;  // string indices, ascending
  ComplexMatrix block;
};

// A d^n x d^n Schur transform kept block diagonal over weights.
class SchurTransform {
 public:
  SchurTransform() = default;
  // Zero-filled skeleton with all weight sectors laid out.
  SchurTransform(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t dim() const { return index_->dim(); }
  const SchurIndex& index() const { return *index_; }
  std::vector<WeightBlock>& blocks() { return blocks_; }
  const std::vector<WeightBlock>& blocks() const { return blocks_; }
  const WeightBlock& block(const Weight& w) const;
  int block_index(const Weight& w) const;  // -1 when absent

  ComplexMatrix dense() const;
  double unitarity_deviation() const;

 private:
  int n_ = 0, d_ = 0;
  std::shared_ptr<const SchurIndex> index_;
  std::vector<WeightBlock> blocks_;
  std::map<Weight, int> block_of_;
};

// Dense targets: direct sum of psi_shape(s_i) (x) I and of I (x) GT(E_{k,l}).
ComplexMatrix sym_target(const SchurIndex& index, int i);
ComplexMatrix gl_target(const SchurIndex& index, int k, int l);

}  // namespace schur
