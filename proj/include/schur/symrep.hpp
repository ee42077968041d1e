#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "schur/combinat.hpp"
#include "schur/linalg.hpp"

namespace schur {

using Ditstring = std::vector<int>;

// One-line notation, values 1..n. (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // Cycle (1 2 ... k) embedded in S_n: j -> j+1 for j < k, k -> 1.
  static Permutation cycle_prefix(int n, int k);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }
  Permutation inverse() const;
  Permutation pow(int e) const;
  bool is_identity() const;
  std::string cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
};

std::vector<Permutation> all_permutations(int n);
// Position of the permutation in lexicographic order (Lehmer rank).
std::size_t lex_rank(const Permutation& p);
// Adjacent indices i_1..i_m with p = s_{i_1} s_{i_2} ... s_{i_m}, via bubble sort.
std::vector<int> adjacent_word(const Permutation& p);

// Young-Yamanouchi orthogonal form of one irrep.
struct GeneratorEntry {
  double diag = 0.0;
  int partner = -1;  // index of the tableau with i, i+1 swapped, or -1
  double off = 0.0;
};

struct IrrepData {
  Partition shape;
  std::vector<StandardTableau> basis;
  std::map<std::vector<int>, int> index_of_word;
  // generators[i-1][t] describes row t of psi(s_i)
  std::vector<std::vector<GeneratorEntry>> generators;

  int dim() const { return static_cast<int>(basis.size()); }
  int index(const StandardTableau& t) const;
};

class IrrepTable {
 public:
  explicit IrrepTable(int n);
  int n() const { return n_; }
  const std::vector<IrrepData>& irreps() const { return irreps_; }
  const IrrepData& irrep(const Partition& shape) const;
  int shape_index(const Partition& shape) const;

 private:
  int n_;
  std::vector<IrrepData> irreps_;
};

// Built once per n; the reference stays valid for the program lifetime.
const IrrepTable& irrep_table(int n);

ComplexMatrix yy_generator(const Partition& shape, int i);
ComplexMatrix irrep_matrix(const Partition& shape, const Permutation& sigma);
// block <- psi(sigma) * block, for a block with dim(shape) rows.
void apply_irrep_left(const IrrepData& irrep, const Permutation& sigma, RealMatrix& block);
void apply_generator_left(const IrrepData& irrep, int i, RealMatrix& block);

ComplexMatrix qft_matrix(int n, int cap = 6);
ComplexMatrix left_regular(const Permutation& sigma);
ComplexMatrix right_regular(const Permutation& sigma);

std::size_t string_index(const Ditstring& x, int d);
Ditstring string_at(std::size_t index, int n, int d);
Weight string_weight(const Ditstring& x, int d);
// psi(sigma)|x_1..x_n> = |x_{sigma^-1(1)} .. x_{sigma^-1(n)}>
Ditstring permute_string(const Permutation& sigma, const Ditstring& x);
ComplexMatrix tensor_perm_action(const Permutation& sigma, int n, int d);

class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(int n) : n_(n) {}
  static GroupAlgebraElement basis(const Permutation& g, cplx c = 1.0);
  // (1/|H|) sum over H
  static GroupAlgebraElement average(const std::vector<Permutation>& group);
  static GroupAlgebraElement sum(const std::vector<Permutation>& elements);

  int degree() const { return n_; }
  const std::map<Permutation, cplx>& terms() const { return terms_; }
  void add(const Permutation& g, cplx c);
  cplx coefficient(const Permutation& g) const;

  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(cplx c) const;
  double distance(const GroupAlgebraElement& o) const;

  // Coordinates in C^{n!}, lex order.
  ComplexVector to_vector() const;
  ComplexMatrix left_action() const;
  ComplexMatrix right_action() const;
  ComplexMatrix in_irrep(const Partition& shape) const;

 private:
  int n_ = 0;
  std::map<Permutation, cplx> terms_;
};

// Y_mu on consecutive position blocks; zero parts of a weight are skipped.
std::vector<Permutation> young_subgroup(const Composition& mu);
std::vector<Permutation> young_subgroup(const Weight& w);
ComplexMatrix young_projector(const Partition& shape, const Composition& mu);
// Stable-sort representative t with psi(t)|sorted(x)> = |x>.
Permutation sorting_permutation(const Ditstring& x);
GroupAlgebraElement coset_vector(const Ditstring& x);
std::vector<Permutation> transversal(const Composition& mu);

}  // namespace schur
