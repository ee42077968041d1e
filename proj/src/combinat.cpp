#include "schur/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schur {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition with negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts not weakly decreasing: " + join_ints(parts_));
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::operator()(int row) const {
  if (row < 1) throw std::out_of_range("partition row index");
  return row <= length() ? parts_[row - 1] : 0;
}

std::vector<int> Partition::padded(int rows) const {
  if (rows < length()) throw std::invalid_argument("cannot pad " + str() + " to fewer rows");
  std::vector<int> out(parts_);
  out.resize(rows, 0);
  return out;
}

bool Partition::can_add(int row) const {
  if (row < 1 || row > length() + 1) return false;
  return row == 1 || (*this)(row - 1) > (*this)(row);
}

bool Partition::can_remove(int row) const {
  if (row < 1 || row > length()) return false;
  return (*this)(row) > (*this)(row + 1);
}

Partition Partition::add_box(int row) const {
  if (!can_add(row)) throw std::invalid_argument("cannot add box in row " + std::to_string(row) + " of " + str());
  std::vector<int> p = padded(std::max(length(), row));
  ++p[row - 1];
  return Partition(std::move(p));
}

Partition Partition::remove_box(int row) const {
  if (!can_remove(row)) throw std::invalid_argument("cannot remove box from row " + std::to_string(row) + " of " + str());
  std::vector<int> p = parts_;
  --p[row - 1];
  return Partition(std::move(p));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other(i) > (*this)(i)) return false;
  return true;
}

std::string Partition::str() const { return join_ints(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be positive: " + join_ints(parts_));
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::prefix(int k) const {
  if (k < 0 || k > length()) throw std::out_of_range("composition prefix index");
  return std::accumulate(parts_.begin(), parts_.begin() + k, 0);
}

AlphabetMap::AlphabetMap(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1) throw std::invalid_argument("alphabet symbols start at 1");
    if (i + 1 < values_.size() && values_[i] >= values_[i + 1])
      throw std::invalid_argument("alphabet map must be strictly increasing: " + join_ints(values_));
  }
}

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("weight entries must be nonnegative");
}

int Weight::size() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::pair<Composition, AlphabetMap> Weight::split() const {
  std::vector<int> mu, p;
  for (int k = 0; k < dim(); ++k) {
    if (entries_[k] > 0) {
      mu.push_back(entries_[k]);
      p.push_back(k + 1);
    }
  }
  return {Composition(std::move(mu)), AlphabetMap(std::move(p))};
}

Weight Weight::join(const Composition& mu, const AlphabetMap& p, int d) {
  if (mu.length() != p.length()) throw std::invalid_argument("composition and alphabet map lengths differ");
  std::vector<int> w(d, 0);
  for (int i = 1; i <= p.length(); ++i) {
    if (p(i) > d) throw std::invalid_argument("alphabet symbol exceeds d");
    w[p(i) - 1] = mu(i);
  }
  return Weight(std::move(w));
}

StandardTableau StandardTableau::from_word(std::vector<int> word) {
  std::vector<int> rows;
  for (int y : word) {
    if (y < 1 || y > static_cast<int>(rows.size()) + 1)
      throw std::invalid_argument("not a Yamanouchi word: " + join_ints(word));
    if (y == static_cast<int>(rows.size()) + 1) rows.push_back(0);
    if (y > 1 && rows[y - 2] == rows[y - 1])
      throw std::invalid_argument("not a Yamanouchi word: " + join_ints(word));
    ++rows[y - 1];
  }
  StandardTableau t;
  t.word_ = std::move(word);
  return t;
}

StandardTableau StandardTableau::from_chain(const std::vector<Partition>& chain) {
  if (chain.empty() || chain.front().size() != 0) throw std::invalid_argument("chain must start at the empty shape");
  std::vector<int> word;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Partition& a = chain[i - 1];
    const Partition& b = chain[i];
    if (b.size() != a.size() + 1 || !b.contains(a)) throw std::invalid_argument("chain step is not a single added box");
    int row = 0;
    for (int r = 1; r <= b.length(); ++r)
      if (b(r) != a(r)) row = r;
    word.push_back(row);
  }
  return from_word(std::move(word));
}

StandardTableau StandardTableau::from_filling(const std::vector<std::vector<int>>& rows) {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  std::vector<int> word(n, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int v : rows[r]) {
      if (v < 1 || v > n || word[v - 1] != 0) throw std::invalid_argument("filling is not a permutation of 1..n");
      word[v - 1] = static_cast<int>(r) + 1;
    }
  }
  StandardTableau t = from_word(std::move(word));
  if (t.filling() != rows) throw std::invalid_argument("filling is not standard");
  return t;
}

Partition StandardTableau::shape() const { return prefix_shape(size()); }

Partition StandardTableau::prefix_shape(int i) const {
  std::vector<int> rows;
  for (int k = 0; k < i; ++k) {
    int y = word_[k];
    if (y > static_cast<int>(rows.size())) rows.resize(y, 0);
    ++rows[y - 1];
  }
  return Partition(std::move(rows));
}

std::vector<Partition> StandardTableau::chain() const {
  std::vector<Partition> out;
  out.reserve(word_.size() + 1);
  std::vector<int> rows;
  out.emplace_back();
  for (int y : word_) {
    if (y > static_cast<int>(rows.size())) rows.resize(y, 0);
    ++rows[y - 1];
    out.emplace_back(rows);
  }
  return out;
}

std::vector<std::vector<int>> StandardTableau::filling() const {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < size(); ++i) {
    int y = word_[i];
    if (y > static_cast<int>(rows.size())) rows.resize(y);
    rows[y - 1].push_back(i + 1);
  }
  return rows;
}

std::pair<int, int> StandardTableau::position(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("tableau entry");
  int row = word_[i - 1];
  int col = 0;
  for (int k = 0; k < i; ++k)
    if (word_[k] == row) ++col;
  return {row, col};
}

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (rows_[k].size() != k + 1) throw std::invalid_argument("GT pattern row " + std::to_string(k + 1) + " has wrong length");
}

int GTPattern::row_sum(int k) const {
  if (k == 0) return 0;
  const auto& r = row(k);
  return std::accumulate(r.begin(), r.end(), 0);
}

Partition GTPattern::shape() const { return depth() == 0 ? Partition() : level(depth()); }

Partition GTPattern::level(int k) const { return Partition(row(k)); }

bool GTPattern::valid() const {
  for (int k = 1; k <= depth(); ++k) {
    for (int i = 1; i <= k; ++i) {
      if (at(k, i) < 0) return false;
      if (i < k && at(k, i) < at(k, i + 1)) return false;
      if (k > 1 && i < k && !(at(k, i) >= at(k - 1, i) && at(k - 1, i) >= at(k, i + 1))) return false;
    }
  }
  return true;
}

std::string GTPattern::str() const {
  std::ostringstream os;
  os << '(';
  for (int k = 1; k <= depth(); ++k) {
    if (k > 1) os << ',';
    os << join_ints(row(k));
  }
  os << ')';
  return os.str();
}

std::vector<Partition> enumerate_partitions(int n, int max_rows) {
  if (n < 0 || max_rows < 1) {
    if (n == 0 && max_rows >= 0) return {Partition()};
    throw std::invalid_argument("enumerate_partitions: need n >= 0 and max_rows >= 1");
  }
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  const int n = shape.size();
  std::vector<int> word;
  std::vector<int> filled(shape.length(), 0);
  auto rec = [&](auto& self) -> void {
    if (static_cast<int>(word.size()) == n) {
      out.push_back(StandardTableau::from_word(word));
      return;
    }
    for (int r = 1; r <= shape.length(); ++r) {
      if (filled[r - 1] >= shape(r)) continue;
      if (r > 1 && filled[r - 2] <= filled[r - 1]) continue;
      ++filled[r - 1];
      word.push_back(r);
      self(self);
      word.pop_back();
      --filled[r - 1];
    }
  };
  rec(rec);
  return out;
}

namespace {

// Walks all patterns below a fixed top row. target_sums, when non-null, pins
// the row sum of every level (index k-1 for level k).
template <class Visit>
void walk_gt(const std::vector<int>& top, const std::vector<int>* target_sums, Visit&& visit) {
  const int d = static_cast<int>(top.size());
  if (d == 0) {
    visit(std::vector<std::vector<int>>{});
    return;
  }
  std::vector<std::vector<int>> rows(d);
  rows[d - 1] = top;
  for (int k = 1; k < d; ++k) rows[k - 1].assign(k, 0);

  // fill level k (1-based) entry by entry
  auto rec = [&](auto& self, int k, int i, int sum_so_far) -> void {
    if (k == 0) {
      visit(rows);
      return;
    }
    const auto& up = rows[k];
    if (i > k) {
      if (target_sums && sum_so_far != (*target_sums)[k - 1]) return;
      self(self, k - 1, 1, 0);
      return;
    }
    int lo = up[i], hi = up[i - 1];
    if (target_sums) {
      // remaining entries i+1..k can contribute between rem_lo and rem_hi
      int rem_lo = 0, rem_hi = 0;
      for (int j = i + 1; j <= k; ++j) {
        rem_lo += up[j];
        rem_hi += up[j - 1];
      }
      int need = (*target_sums)[k - 1] - sum_so_far;
      lo = std::max(lo, need - rem_hi);
      hi = std::min(hi, need - rem_lo);
    }
    for (int v = lo; v <= hi; ++v) {
      rows[k - 1][i - 1] = v;
      self(self, k, i + 1, sum_so_far + v);
    }
  };
  rec(rec, d - 1, 1, 0);
}

std::vector<int> level_sums(const Weight& w) {
  std::vector<int> s(w.dim());
  std::partial_sum(w.entries().begin(), w.entries().end(), s.begin());
  return s;
}

}  // namespace

std::vector<GTPattern> enumerate_gt(const Partition& shape, int d) {
  if (d < 0 || shape.length() > d) throw std::invalid_argument("enumerate_gt: shape " + shape.str() + " has more than d rows");
  std::vector<GTPattern> out;
  walk_gt(shape.padded(d), nullptr, [&](const std::vector<std::vector<int>>& rows) { out.emplace_back(rows); });
  // descending, so pattern j of the defining irrep is the letter j+1
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<GTPattern> enumerate_gt(const Partition& shape, const Weight& w) {
  const int d = w.dim();
  if (shape.length() > d) throw std::invalid_argument("enumerate_gt: shape has more rows than the weight length");
  std::vector<GTPattern> out;
  if (w.size() != shape.size()) return out;
  std::vector<int> sums = level_sums(w);
  walk_gt(shape.padded(d), &sums, [&](const std::vector<std::vector<int>>& rows) { out.emplace_back(rows); });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Weight> enumerate_weights(int n, int d) {
  std::vector<Weight> out;
  std::vector<int> cur(d, 0);
  auto rec = [&](auto& self, int k, int remaining) -> void {
    if (k == d - 1) {
      cur[k] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[k] = v;
      self(self, k + 1, remaining - v);
    }
  };
  if (d == 0) {
    if (n == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  rec(rec, 0, n);
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      cur.push_back(part);
      self(self, remaining - part);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

Weight gt_weight(const GTPattern& m) {
  std::vector<int> w(m.depth());
  for (int k = 1; k <= m.depth(); ++k) w[k - 1] = m.row_sum(k) - m.row_sum(k - 1);
  return Weight(std::move(w));
}

GTPattern highest_weight_pattern(const Partition& shape, int d) {
  std::vector<int> top = shape.padded(d);
  std::vector<std::vector<int>> rows(d);
  for (int k = 1; k <= d; ++k) rows[k - 1].assign(top.begin(), top.begin() + k);
  return GTPattern(std::move(rows));
}

std::pair<GTPattern, AlphabetMap> compress_gt(const GTPattern& m) {
  Weight w = gt_weight(m);
  std::vector<std::vector<int>> rows;
  std::vector<int> p;
  for (int k = 1; k <= m.depth(); ++k) {
    if (w(k) == 0) continue;
    p.push_back(k);
    const int len = static_cast<int>(p.size());
    const auto& full = m.row(k);
    for (int i = len; i < k; ++i)
      if (full[i] != 0) throw std::logic_error("compress_gt: nonzero entry beyond the active rows in " + m.str());
    rows.emplace_back(full.begin(), full.begin() + len);
  }
  return {GTPattern(std::move(rows)), AlphabetMap(std::move(p))};
}

GTPattern decompress_gt(const GTPattern& small, const AlphabetMap& p, int d) {
  if (p.length() != small.depth()) throw std::invalid_argument("decompress_gt: alphabet length differs from pattern depth");
  if (p.length() > 0 && p(p.length()) > d) throw std::invalid_argument("decompress_gt: alphabet symbol exceeds d");
  Weight w = gt_weight(small);
  for (int e : w.entries())
    if (e == 0) throw std::invalid_argument("decompress_gt: compressed pattern has a zero weight entry");
  std::vector<std::vector<int>> rows(d);
  int active = 0;
  for (int k = 1; k <= d; ++k) {
    while (active < p.length() && p(active + 1) <= k) ++active;
    rows[k - 1].assign(k, 0);
    if (active > 0) std::copy(small.row(active).begin(), small.row(active).end(), rows[k - 1].begin());
  }
  return GTPattern(std::move(rows));
}

GTPattern pad_gt(const GTPattern& m, int d) {
  if (d < m.depth()) throw std::invalid_argument("pad_gt: target depth smaller than pattern depth");
  std::vector<std::vector<int>> rows = m.rows();
  std::vector<int> top = m.depth() ? m.row(m.depth()) : std::vector<int>{};
  for (int k = m.depth() + 1; k <= d; ++k) {
    top.push_back(0);
    rows.push_back(top);
  }
  return GTPattern(std::move(rows));
}

std::int64_t kostka(const Partition& shape, const Weight& mu) {
  if (shape.size() != mu.size()) throw std::invalid_argument("kostka: sizes differ");
  if (shape.length() > mu.dim()) return 0;
  std::int64_t count = 0;
  std::vector<int> sums = level_sums(mu);
  walk_gt(shape.padded(mu.dim()), &sums, [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

std::int64_t kostka(const Partition& shape, const Composition& mu) { return kostka(shape, Weight(mu.parts())); }

std::vector<int> addable_rows(const Partition& shape, int d) {
  if (shape.length() > d) throw std::invalid_argument("addable_rows: shape has more than d rows");
  std::vector<int> out;
  for (int r = 1; r <= std::min(d, shape.length() + 1); ++r)
    if (shape.can_add(r)) out.push_back(r);
  return out;
}

std::vector<int> removable_rows(const Partition& shape) {
  std::vector<int> out;
  for (int r = 1; r <= shape.length(); ++r)
    if (shape.can_remove(r)) out.push_back(r);
  return out;
}

int axial_distance(const StandardTableau& t, int i) {
  if (i < 1 || i >= t.size()) throw std::out_of_range("axial_distance: need 1 <= i <= n-1");
  auto [r1, c1] = t.position(i);
  auto [r2, c2] = t.position(i + 1);
  return (c2 - r2) - (c1 - r1);
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t syt_count(const Partition& shape) { return static_cast<std::int64_t>(enumerate_syt(shape).size()); }

}  // namespace schur
