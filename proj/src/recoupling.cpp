#include "schur/recoupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace schur {

namespace {

bool horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int i = 1; i <= outer.length(); ++i)
    if (outer(i + 1) > inner(i)) return false;
  return true;
}

void check_fusion(int k, const Partition& base, const Partition& nu) {
  if (k < 1) throw std::invalid_argument("F-symbol: one-row size must be >= 1");
  if (nu.size() != base.size() + k) throw std::invalid_argument("F-symbol: |nu| != k + |base|");
  if (!horizontal_strip(nu, base))
    throw std::invalid_argument("F-symbol: " + nu.str() + "/" + base.str() + " is not a horizontal strip");
}

double root_of_ratio(double num, double den) {
  if (den == 0.0) throw std::logic_error("zero denominator in recoupling coefficient");
  return std::sqrt(std::abs(num / den));
}

bool nonincreasing_nonneg(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
  }
  return true;
}

// lower has one entry fewer than upper
bool interlaces(const std::vector<int>& upper, const std::vector<int>& lower) {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1])) return false;
  return true;
}

}  // namespace

double f_left(int k, const Partition& base, const Partition& nu, int a) {
  check_fusion(k, base, nu);
  if (!base.can_add(a)) throw std::invalid_argument("f_left: row " + std::to_string(a) + " not addable to " + base.str());
  if (!nu.contains(base.add_box(a))) return 0.0;
  const int len = nu.length();
  const long shift = static_cast<long>(a) - base(a);
  double num = 1.0, den = 1.0;
  for (int i = 1; i <= len; ++i) {
    num *= static_cast<double>(nu(i) - i + shift);
    if (i != a) den *= static_cast<double>(base(i) - i + shift);
  }
  return root_of_ratio(num, k * den);
}

double f_right(int k, const Partition& base, const Partition& nu, int r) {
  check_fusion(k, base, nu);
  if (!nu.can_remove(r)) throw std::invalid_argument("f_right: row " + std::to_string(r) + " not removable from " + nu.str());
  if (!nu.remove_box(r).contains(base)) return 0.0;
  const int len = nu.length();
  const long shift = static_cast<long>(nu(r)) - r;
  double num = 1.0, den = 1.0;
  for (int i = 1; i <= len; ++i) {
    num *= static_cast<double>(shift - base(i) + i);
    if (i != r) den *= static_cast<double>(shift - nu(i) + i);
  }
  return root_of_ratio(num, k * den);
}

double rw_entry(const std::vector<int>& top, const std::vector<int>& mid, int i, int j) {
  const int d = static_cast<int>(top.size());
  if (static_cast<int>(mid.size()) != d - 1) throw std::invalid_argument("rw_entry: level sizes must be d and d-1");
  if (i < 1 || i > d || j < 0 || j > d - 1) throw std::out_of_range("rw_entry: index outside range");
  if (!nonincreasing_nonneg(top) || !nonincreasing_nonneg(mid)) return 0.0;

  std::vector<int> top_out = top;
  ++top_out[i - 1];
  std::vector<int> mid_in = mid;
  if (j > 0) --mid_in[j - 1];
  if (!nonincreasing_nonneg(top_out) || !nonincreasing_nonneg(mid_in)) return 0.0;
  if (!interlaces(top_out, mid) || !interlaces(top, mid_in)) return 0.0;

  // l_{k,d} = M_k - k and l_{k,d-1} = N_k - k - [k = j]
  std::vector<double> ltop(d + 1), lmid(d);
  for (int k = 1; k <= d; ++k) ltop[k] = top[k - 1] - k;
  for (int k = 1; k <= d - 1; ++k) lmid[k] = mid[k - 1] - k - (k == j ? 1 : 0);

  double num = 1.0, den = 1.0;
  if (j == 0) {
    for (int k = 1; k <= d - 1; ++k) num *= lmid[k] - ltop[i] - 1.0;
    for (int k = 1; k <= d; ++k)
      if (k != i) den *= ltop[k] - ltop[i];
    return root_of_ratio(num, den);
  }
  for (int k = 1; k <= d - 1; ++k) {
    if (k == j) continue;
    num *= lmid[k] - ltop[i] - 1.0;
    den *= lmid[k] - lmid[j] - 1.0;
  }
  for (int k = 1; k <= d; ++k) {
    if (k == i) continue;
    num *= ltop[k] - lmid[j];
    den *= ltop[k] - ltop[i];
  }
  const double sign = i <= j ? 1.0 : -1.0;
  return sign * root_of_ratio(num, den);
}

RealMatrix rw_matrix(const std::vector<int>& top, const std::vector<int>& mid) {
  const int d = static_cast<int>(top.size());
  RealMatrix m(d, d);
  for (int i = 1; i <= d; ++i)
    for (int j = 0; j < d; ++j) m(i - 1, j) = rw_entry(top, mid, i, j);
  return m;
}

std::vector<PatternTerm> cg_column(const GTPattern& m, int x) {
  const int d = m.depth();
  if (x < 1 || x > d) throw std::out_of_range("cg_column: letter outside [d]");
  std::vector<PatternTerm> out;
  GTPattern target = m;
  // level k, row that gained the box at level k-1 (0 at the entry level)
  auto rec = [&](auto& self, int k, int prev_row, double amp) -> void {
    if (k > d) {
      out.emplace_back(target, amp);
      return;
    }
    const std::vector<int>& top = m.row(k);
    const std::vector<int>& mid = k > 1 ? target.row(k - 1) : std::vector<int>{};
    for (int i = 1; i <= k; ++i) {
      const double c = rw_entry(top, mid, i, prev_row);
      if (c == 0.0) continue;
      target.at(k, i) += 1;
      self(self, k + 1, i, amp * c);
      target.at(k, i) -= 1;
    }
  };
  rec(rec, x, 0, 1.0);
  return out;
}

int CGBlock::channel_index(int row) const {
  for (std::size_t c = channels.size(); c-- > 0;)
    if (row >= offsets[c]) return static_cast<int>(c);
  throw std::out_of_range("CGBlock row");
}

CGBlock empty_cg_block(const Partition& shape, int d) {
  CGBlock b;
  b.shape = shape;
  b.d = d;
  b.source = GTBasis(shape, d);
  b.channels = addable_rows(shape, d);
  int offset = 0;
  for (int a : b.channels) {
    b.targets.emplace_back(shape.add_box(a), d);
    b.offsets.push_back(offset);
    offset += b.targets.back().dim();
  }
  b.matrix = ComplexMatrix::Zero(offset, b.source.dim() * d);
  return b;
}

CGBlock cg_transform(const Partition& shape, int d, std::size_t cap) {
  CGBlock b = empty_cg_block(shape, d);
  require_within_cap(static_cast<std::size_t>(b.matrix.cols()), cap, "cg_transform");
  if (b.matrix.rows() != b.matrix.cols()) throw std::logic_error("Pieri decomposition is not dimension preserving");
  for (int p = 0; p < b.source.dim(); ++p) {
    for (int x = 1; x <= d; ++x) {
      for (const auto& [target, c] : cg_column(b.source.patterns[p], x)) {
        int added = 0;
        for (int r = 1; r <= d && !added; ++r)
          if (target.at(d, r) != shape(r)) added = r;
        const auto ch = std::find(b.channels.begin(), b.channels.end(), added) - b.channels.begin();
        const int row = b.offsets.at(ch) + b.targets.at(ch).index(target);
        b.matrix(row, b.column(p, x)) += c;
      }
    }
  }
  return b;
}

}  // namespace schur
