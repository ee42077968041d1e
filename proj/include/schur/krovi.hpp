#pragma once

#include <map>
#include <memory>
#include <vector>

#include "schur/combinat.hpp"
#include "schur/linalg.hpp"
#include "schur/schur_basis.hpp"
#include "schur/symrep.hpp"

namespace schur {

struct PreprocessResult {
  AlphabetMap p;
  Composition mu;
  Permutation t;                        // stable-sort representative
  std::vector<Permutation> support;     // the sorting permutations t*Y_mu
};

PreprocessResult preprocess(const Ditstring& x);

// Recoupling isometry from SYT(shape) to GT(shape, mu) (compressed patterns).
struct VBlock {
  Partition shape;
  Composition mu;
  std::vector<GTPattern> columns;
  std::map<GTPattern, int> column_of;
  RealMatrix matrix;  // dim(shape) x K

  int kostka() const { return static_cast<int>(columns.size()); }
  int column(const GTPattern& m) const;
};

// Patterns with depth length(mu), top row shape and weight mu.
std::vector<GTPattern> compressed_patterns(const Partition& shape, const Composition& mu);

double v_entry(const Partition& shape, const Composition& mu, const StandardTableau& t, const GTPattern& m);
VBlock v_block(const Partition& shape, const Composition& mu);
// Memoized; safe for concurrent callers.
std::shared_ptr<const VBlock> cached_v_block(const Partition& shape, const Composition& mu);

// Closed-form column assembly.
SchurTransform schur_unitary_krovi(int n, int d, std::size_t cap = dense_cap());
// Literal P -> QFT -> (Pi) -> V^dagger application; n! sized, n <= qft_cap.
SchurTransform schur_unitary_krovi_staged(int n, int d, int qft_cap = 6);

}  // namespace schur
