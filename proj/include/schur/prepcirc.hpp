#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schur/combinat.hpp"
#include "schur/symrep.hpp"

namespace schur {

// One classical assignment of every register. Zero marks an empty slot in
// p, mu and the coset registers. coset[k] holds the sorted rank of site k+1.
struct Registers {
  std::vector<int> x;
  std::vector<int> p;
  std::vector<int> mu;
  std::vector<int> coset;
  int pos = 0;   // auxiliary position register
  int uniq = 0;  // uniqueness bit
  int step = 0;  // sites already absorbed

  friend bool operator==(const Registers&, const Registers&) = default;
  friend auto operator<=>(const Registers&, const Registers&) = default;
};

struct RegisterState {
  int n = 0;
  int d = 0;
  std::map<Registers, double> amplitudes;

  double norm() const;
};

class AncillaError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

RegisterState initial_registers(const Ditstring& x, int d);
RegisterState subroutine_a(const RegisterState& s);
RegisterState subroutine_b(const RegisterState& s);
RegisterState subroutine_c(const RegisterState& s);
RegisterState subroutine_d(const RegisterState& s);
RegisterState subroutine_e(const RegisterState& s);
RegisterState subroutine_h(const RegisterState& s);
// H E D C B A on the next site.
RegisterState prep_step(const RegisterState& s);
RegisterState run_preprocessing(const Ditstring& x, int d);

// Prefix sums (SUM map): out[k-1] = mu_1 + ... + mu_k.
std::vector<int> prefix_sums(const std::vector<int>& mu);

struct CompressedString {
  std::vector<int> e;      // e_i = rank of x_i among the distinct symbols
  std::vector<int> p;      // distinct symbols ascending, padded with 0 to length n
  Composition mu;
  AlphabetMap alphabet() const;
};

CompressedString compress_string(const Ditstring& x);
Ditstring decompress_string(const std::vector<int>& e, const std::vector<int>& p);

// Digits (i_n, ..., i_2), i_k in {0..k-1}, with sigma = c_n^{i_n} ... c_2^{i_2}
// and c_k the cycle (1 2 ... k).
std::vector<int> encode_perm(const Permutation& sigma);
Permutation decode_perm(const std::vector<int>& digits, int n);

// Position i in 1..n -> (block k, offset j) with j = i - (mu_1 + ... + mu_{k-1}).
std::pair<int, int> row_index_map(const std::vector<int>& mu, int i);
std::pair<int, int> row_index_map(const Composition& mu, int i);

}  // namespace schur
