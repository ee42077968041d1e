#pragma once

#include <map>
#include <utility>
#include <vector>

#include "schur/combinat.hpp"
#include "schur/gtmod.hpp"
#include "schur/linalg.hpp"
#include "schur/schur_basis.hpp"
#include "schur/symrep.hpp"

namespace schur {

// Amplitudes over (Yamanouchi prefix, GT pattern of the current shape).
struct CascadeState {
  int step = 0;
  int depth = 0;
  std::map<std::pair<std::vector<int>, GTPattern>, double> amplitudes;

  double norm() const;
};

// Memo of CG columns keyed by (pattern, letter); single-threaded use.
class CouplingCache {
 public:
  const std::vector<PatternTerm>& column(const GTPattern& m, int letter);

 private:
  std::map<std::pair<GTPattern, int>, std::vector<PatternTerm>> memo_;
};

CascadeState cascade_start(int depth);
// Couples one more site holding `letter` through the Pieri CG of the current shape.
CascadeState cascade_step(const CascadeState& state, int letter, CouplingCache* cache = nullptr);
// Runs the whole cascade; norms[i] is the norm after i couplings.
CascadeState run_cascade(const Ditstring& letters, int depth, std::vector<double>* norms = nullptr,
                         CouplingCache* cache = nullptr);

SchurTransform schur_unitary_bch(int n, int d, std::size_t cap = dense_cap());
SchurTransform schur_unitary_bch_highdim(int n, int d, std::size_t cap = dense_cap());

}  // namespace schur
