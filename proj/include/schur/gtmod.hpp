#pragma once

#include <map>
#include <utility>
#include <vector>

#include "schur/combinat.hpp"
#include "schur/linalg.hpp"
#include "schur/symrep.hpp"

namespace schur {

// GT(shape, d) in canonical order with a reverse lookup.
struct GTBasis {
  Partition shape;
  int d = 0;
  std::vector<GTPattern> patterns;
  std::map<GTPattern, int> index_of;

  GTBasis() = default;
  GTBasis(const Partition& shape, int d);
  int dim() const { return static_cast<int>(patterns.size()); }
  int index(const GTPattern& m) const;
  int find(const GTPattern& m) const;  // -1 when absent
};

struct GlGeneratorMatrix {
  Partition shape;
  int d = 0;
  int k = 0;  // E_{k,l}
  int l = 0;
  ComplexMatrix matrix;
};

using PatternTerm = std::pair<GTPattern, double>;

// Coefficient of |M - delta_{k-1,j}> in E_{k,k-1}|M>; 0 if the target is not a pattern.
double gamma_minus(const GTPattern& m, int k, int j);
// Coefficient of |M + delta_{k-1,j}> in E_{k-1,k}|M>.
double gamma_plus(const GTPattern& m, int k, int j);

std::vector<PatternTerm> apply_lower(const GTPattern& m, int k);
std::vector<PatternTerm> apply_raise(const GTPattern& m, int k);
// E_{k,l}|M> for |k-l| <= 1.
std::vector<PatternTerm> apply_generator(const GTPattern& m, int k, int l);

GlGeneratorMatrix gl_diag(const Partition& shape, int d, int k);
GlGeneratorMatrix gl_lower(const Partition& shape, int d, int k);
GlGeneratorMatrix gl_raise(const Partition& shape, int d, int k);
// Dense matrix of E_{k,l} on GT(shape, d).
ComplexMatrix gl_generator(const GTBasis& basis, int k, int l);

// phi(E_{k,l})|x> = sum over sites holding l of |x with that site set to k>.
std::vector<Ditstring> string_gl_action(const Ditstring& x, int k, int l);
ComplexMatrix tensor_gl_action(int k, int l, int n, int d);

// All (k,l) with |k-l| <= 1, k,l in [d]: Cartan first, then lowering, then raising.
std::vector<std::pair<int, int>> adjacent_generators(int d);

}  // namespace schur
