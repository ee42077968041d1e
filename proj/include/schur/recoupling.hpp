#pragma once

#include <utility>
#include <vector>

#include "schur/combinat.hpp"
#include "schur/gtmod.hpp"
#include "schur/linalg.hpp"

namespace schur {

// Overlap between fusing a box into the one-row shape (k-1) first and fusing
// it into `base` first (channel base + box in row a). nu/base must be a
// horizontal strip of size k.
double f_left(int k, const Partition& base, const Partition& nu, int a);
// Overlap between fusing a box into (k-1) first and fusing (k-1) into base
// first (channel nu minus the box in row r).
double f_right(int k, const Partition& base, const Partition& nu, int r);

// Reduced Wigner entry for U(d) with top row `top` (length d) and output
// level-(d-1) row `mid` (length d-1). i: row gaining the box at level d;
// j: row gaining it at level d-1, or 0 when the box is absent there.
double rw_entry(const std::vector<int>& top, const std::vector<int>& mid, int i, int j);
// The d x d matrix of rw_entry values, rows i = 1..d, columns j = 0..d-1.
RealMatrix rw_matrix(const std::vector<int>& top, const std::vector<int>& mid);

// Coupling coefficients <M'| (|M> (x) |x>) for all nonzero targets M'.
std::vector<PatternTerm> cg_column(const GTPattern& m, int x);

// Map W_shape (x) C^d -> direct sum over addable rows a of W_{shape+a}.
struct CGBlock {
  Partition shape;
  int d = 0;
  GTBasis source;
  std::vector<int> channels;           // addable rows, ascending
  std::vector<GTBasis> targets;        // one per channel
  std::vector<int> offsets;            // row offset of each channel
  ComplexMatrix matrix;                // rows: targets, cols: (pattern, letter)

  int column(int pattern_index, int letter) const { return pattern_index * d + (letter - 1); }
  int channel_index(int row) const;
};

CGBlock empty_cg_block(const Partition& shape, int d);
CGBlock cg_transform(const Partition& shape, int d, std::size_t cap = 1u << 16);

}  // namespace schur
