#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace schur {

// Weakly decreasing positive parts; trailing zeros are never stored.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  // 1-based row access; rows past the length read as 0.
  int operator()(int row) const;
  std::vector<int> padded(int rows) const;

  bool can_add(int row) const;
  bool can_remove(int row) const;
  Partition add_box(int row) const;
  Partition remove_box(int row) const;
  bool contains(const Partition& other) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Plain lexicographic comparison on parts; the canonical enumeration
  // order is the reverse of this.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Strictly positive parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator()(int k) const { return parts_.at(k - 1); }
  // Prefix sums; prefix(0) = 0, prefix(length) = size.
  int prefix(int k) const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Strictly increasing symbols drawn from [d].
class AlphabetMap {
 public:
  AlphabetMap() = default;
  explicit AlphabetMap(std::vector<int> values);

  int length() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_.at(i - 1); }

  friend bool operator==(const AlphabetMap&, const AlphabetMap&) = default;

 private:
  std::vector<int> values_;
};

// Symbol counts over [d]; zeros allowed.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> entries);

  int dim() const { return static_cast<int>(entries_.size()); }
  int size() const;
  const std::vector<int>& entries() const { return entries_; }
  int operator()(int k) const { return entries_.at(k - 1); }

  // Drops the zero entries: nonzero counts and the symbols carrying them.
  std::pair<Composition, AlphabetMap> split() const;
  static Weight join(const Composition& mu, const AlphabetMap& p, int d);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

class StandardTableau {
 public:
  StandardTableau() = default;

  static StandardTableau from_word(std::vector<int> word);
  static StandardTableau from_chain(const std::vector<Partition>& chain);
  // Rows of entries 1..n.
  static StandardTableau from_filling(const std::vector<std::vector<int>>& rows);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  Partition shape() const;
  // T_0 = empty, ..., T_n = shape.
  std::vector<Partition> chain() const;
  // Prefix shape T_i.
  Partition prefix_shape(int i) const;
  std::vector<std::vector<int>> filling() const;
  // 1-based (row, column) of entry i.
  std::pair<int, int> position(int i) const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

// rows[k-1] holds the k entries of level k; the last row is the padded shape.
class GTPattern {
 public:
  GTPattern() = default;
  explicit GTPattern(std::vector<std::vector<int>> rows);

  int depth() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& row(int k) const { return rows_.at(k - 1); }
  // Entry M_{k,i}, 1-based.
  int at(int k, int i) const { return rows_[k - 1][i - 1]; }
  int& at(int k, int i) { return rows_[k - 1][i - 1]; }
  int row_sum(int k) const;

  Partition shape() const;
  // Level-k row as a partition (zeros trimmed).
  Partition level(int k) const;
  bool valid() const;

  std::string str() const;

  friend bool operator==(const GTPattern&, const GTPattern&) = default;
  // Lexicographic on the row-reading sequence M11, M21, M22, ...
  friend auto operator<=>(const GTPattern& a, const GTPattern& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
};

std::vector<Partition> enumerate_partitions(int n, int max_rows);
std::vector<StandardTableau> enumerate_syt(const Partition& shape);
// Canonical GT order: descending lex on the row-reading sequence.
std::vector<GTPattern> enumerate_gt(const Partition& shape, int d);
// Patterns of the given top shape with a fixed weight, canonical order.
std::vector<GTPattern> enumerate_gt(const Partition& shape, const Weight& w);
// Weights of length d summing to n, ascending lex.
std::vector<Weight> enumerate_weights(int n, int d);
std::vector<Composition> enumerate_compositions(int n);

Weight gt_weight(const GTPattern& m);
GTPattern highest_weight_pattern(const Partition& shape, int d);
std::pair<GTPattern, AlphabetMap> compress_gt(const GTPattern& m);
GTPattern decompress_gt(const GTPattern& small, const AlphabetMap& p, int d);
// Extends a pattern to depth d by repeating the top row padded with zeros.
GTPattern pad_gt(const GTPattern& m, int d);

std::int64_t kostka(const Partition& shape, const Weight& mu);
std::int64_t kostka(const Partition& shape, const Composition& mu);

std::vector<int> addable_rows(const Partition& shape, int d);
std::vector<int> removable_rows(const Partition& shape);

int axial_distance(const StandardTableau& t, int i);

std::int64_t factorial(int n);
std::int64_t syt_count(const Partition& shape);

}  // namespace schur
