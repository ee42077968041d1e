#include "schur/symrep.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schur {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<char> seen(img_.size() + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("not a permutation in one-line notation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || b < 1 || a > n || b > n) throw std::out_of_range("transposition points");
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::cycle_prefix(int n, int k) {
  if (k < 1 || k > n) throw std::out_of_range("cycle length");
  Permutation p = identity(n);
  for (int j = 1; j < k; ++j) p.img_[j - 1] = j + 1;
  p.img_[k - 1] = 1;
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 1; i <= size(); ++i) inv[img_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(int e) const {
  Permutation base = e >= 0 ? *this : inverse();
  Permutation out = identity(size());
  for (int k = 0; k < std::abs(e); ++k) out = base * out;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

std::string Permutation::cycles() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size() + 1, 0);
  bool any = false;
  for (int i = 1; i <= size(); ++i) {
    if (seen[i] || img_[i - 1] == i) continue;
    any = true;
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = img_[j - 1];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(a.img_.size());
  for (int i = 1; i <= a.size(); ++i) out[i - 1] = a(b(i));
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::size_t lex_rank(const Permutation& p) {
  const int n = p.size();
  std::size_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++smaller_later;
    rank = rank * static_cast<std::size_t>(n - i + 1) + static_cast<std::size_t>(smaller_later);
  }
  return rank;
}

std::vector<int> adjacent_word(const Permutation& p) {
  std::vector<int> a = p.one_line();
  std::vector<int> swaps;
  const int n = p.size();
  for (int pass = 0; pass < n; ++pass) {
    bool moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        swaps.push_back(i + 1);
        moved = true;
      }
    }
    if (!moved) break;
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

int IrrepData::index(const StandardTableau& t) const {
  auto it = index_of_word.find(t.word());
  if (it == index_of_word.end()) throw std::invalid_argument("tableau not in irrep basis");
  return it->second;
}

IrrepTable::IrrepTable(int n) : n_(n) {
  for (const Partition& shape : enumerate_partitions(n, std::max(n, 1))) {
    IrrepData data;
    data.shape = shape;
    data.basis = enumerate_syt(shape);
    for (int t = 0; t < data.dim(); ++t) data.index_of_word.emplace(data.basis[t].word(), t);
    for (int i = 1; i < n; ++i) {
      std::vector<GeneratorEntry> gen(data.dim());
      for (int t = 0; t < data.dim(); ++t) {
        const int r = axial_distance(data.basis[t], i);
        gen[t].diag = 1.0 / r;
        if (std::abs(r) > 1) {
          std::vector<int> w = data.basis[t].word();
          std::swap(w[i - 1], w[i]);
          gen[t].partner = data.index_of_word.at(w);
          gen[t].off = std::sqrt(1.0 - 1.0 / (static_cast<double>(r) * r));
        }
      }
      data.generators.push_back(std::move(gen));
    }
    irreps_.push_back(std::move(data));
  }
}

int IrrepTable::shape_index(const Partition& shape) const {
  for (std::size_t k = 0; k < irreps_.size(); ++k)
    if (irreps_[k].shape == shape) return static_cast<int>(k);
  throw std::invalid_argument("shape " + shape.str() + " is not a partition of " + std::to_string(n_));
}

const IrrepData& IrrepTable::irrep(const Partition& shape) const { return irreps_[shape_index(shape)]; }

const IrrepTable& irrep_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<IrrepTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<IrrepTable>(n);
  return *slot;
}

void apply_generator_left(const IrrepData& irrep, int i, RealMatrix& block) {
  const auto& gen = irrep.generators.at(i - 1);
  RealMatrix out(block.rows(), block.cols());
  for (int t = 0; t < irrep.dim(); ++t) {
    out.row(t) = gen[t].diag * block.row(t);
    if (gen[t].partner >= 0) out.row(t) += gen[t].off * block.row(gen[t].partner);
  }
  block.swap(out);
}

void apply_irrep_left(const IrrepData& irrep, const Permutation& sigma, RealMatrix& block) {
  std::vector<int> word = adjacent_word(sigma);
  for (auto it = word.rbegin(); it != word.rend(); ++it) apply_generator_left(irrep, *it, block);
}

ComplexMatrix yy_generator(const Partition& shape, int i) {
  const IrrepTable& table = irrep_table(shape.size());
  if (i < 1 || i >= shape.size()) throw std::out_of_range("yy_generator: need 1 <= i <= n-1");
  const IrrepData& irrep = table.irrep(shape);
  RealMatrix m = RealMatrix::Identity(irrep.dim(), irrep.dim());
  apply_generator_left(irrep, i, m);
  return m.cast<cplx>();
}

ComplexMatrix irrep_matrix(const Partition& shape, const Permutation& sigma) {
  if (sigma.size() != shape.size()) throw std::invalid_argument("irrep_matrix: degree mismatch");
  const IrrepData& irrep = irrep_table(shape.size()).irrep(shape);
  RealMatrix m = RealMatrix::Identity(irrep.dim(), irrep.dim());
  apply_irrep_left(irrep, sigma, m);
  return m.cast<cplx>();
}

ComplexMatrix qft_matrix(int n, int cap) {
  if (n > cap) throw CapExceeded("qft_matrix: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  const std::vector<Permutation> perms = all_permutations(n);
  const double nfact = static_cast<double>(perms.size());
  const IrrepTable& table = irrep_table(n);
  ComplexMatrix q = ComplexMatrix::Zero(static_cast<Eigen::Index>(perms.size()), static_cast<Eigen::Index>(perms.size()));
  Eigen::Index row0 = 0;
  for (const IrrepData& irrep : table.irreps()) {
    const int dl = irrep.dim();
    const double scale = std::sqrt(dl / nfact);
    for (std::size_t c = 0; c < perms.size(); ++c) {
      RealMatrix m = RealMatrix::Identity(dl, dl);
      apply_irrep_left(irrep, perms[c], m);
      for (int s = 0; s < dl; ++s)
        for (int t = 0; t < dl; ++t) q(row0 + s * dl + t, static_cast<Eigen::Index>(c)) = scale * m(s, t);
    }
    row0 += static_cast<Eigen::Index>(dl) * dl;
  }
  return q;
}

ComplexMatrix left_regular(const Permutation& sigma) {
  const std::vector<Permutation> perms = all_permutations(sigma.size());
  const auto N = static_cast<Eigen::Index>(perms.size());
  ComplexMatrix m = ComplexMatrix::Zero(N, N);
  for (std::size_t c = 0; c < perms.size(); ++c) m(static_cast<Eigen::Index>(lex_rank(sigma * perms[c])), static_cast<Eigen::Index>(c)) = 1.0;
  return m;
}

ComplexMatrix right_regular(const Permutation& sigma) {
  const std::vector<Permutation> perms = all_permutations(sigma.size());
  const auto N = static_cast<Eigen::Index>(perms.size());
  const Permutation inv = sigma.inverse();
  ComplexMatrix m = ComplexMatrix::Zero(N, N);
  for (std::size_t c = 0; c < perms.size(); ++c) m(static_cast<Eigen::Index>(lex_rank(perms[c] * inv)), static_cast<Eigen::Index>(c)) = 1.0;
  return m;
}

std::size_t string_index(const Ditstring& x, int d) {
  std::size_t idx = 0;
  for (int v : x) {
    if (v < 1 || v > d) throw std::out_of_range("string symbol outside [d]");
    idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(v - 1);
  }
  return idx;
}

Ditstring string_at(std::size_t index, int n, int d) {
  Ditstring x(n);
  for (int i = n - 1; i >= 0; --i) {
    x[i] = static_cast<int>(index % static_cast<std::size_t>(d)) + 1;
    index /= static_cast<std::size_t>(d);
  }
  return x;
}

Weight string_weight(const Ditstring& x, int d) {
  std::vector<int> w(d, 0);
  for (int v : x) {
    if (v < 1 || v > d) throw std::out_of_range("string symbol outside [d]");
    ++w[v - 1];
  }
  return Weight(std::move(w));
}

Ditstring permute_string(const Permutation& sigma, const Ditstring& x) {
  if (sigma.size() != static_cast<int>(x.size())) throw std::invalid_argument("permute_string: degree mismatch");
  Ditstring y(x.size());
  for (int i = 1; i <= sigma.size(); ++i) y[sigma(i) - 1] = x[i - 1];
  return y;
}

namespace {

std::size_t checked_power(int d, int n) {
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    if (dim > (std::size_t{1} << 40) / static_cast<std::size_t>(std::max(d, 1))) return std::size_t{1} << 40;
    dim *= static_cast<std::size_t>(d);
  }
  return dim;
}

}  // namespace

ComplexMatrix tensor_perm_action(const Permutation& sigma, int n, int d) {
  if (sigma.size() != n) throw std::invalid_argument("tensor_perm_action: degree mismatch");
  const std::size_t dim = checked_power(d, n);
  require_within_cap(dim, dense_cap(), "tensor_perm_action");
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t c = 0; c < dim; ++c) {
    Ditstring y = permute_string(sigma, string_at(c, n, d));
    m(static_cast<Eigen::Index>(string_index(y, d)), static_cast<Eigen::Index>(c)) = 1.0;
  }
  return m;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& g, cplx c) {
  GroupAlgebraElement a(g.size());
  a.add(g, c);
  return a;
}

GroupAlgebraElement GroupAlgebraElement::average(const std::vector<Permutation>& group) {
  if (group.empty()) throw std::invalid_argument("average over an empty set");
  GroupAlgebraElement a(group.front().size());
  const double w = 1.0 / static_cast<double>(group.size());
  for (const auto& g : group) a.add(g, w);
  return a;
}

GroupAlgebraElement GroupAlgebraElement::sum(const std::vector<Permutation>& elements) {
  if (elements.empty()) throw std::invalid_argument("sum over an empty set");
  GroupAlgebraElement a(elements.front().size());
  for (const auto& g : elements) a.add(g, 1.0);
  return a;
}

void GroupAlgebraElement::add(const Permutation& g, cplx c) {
  if (n_ == 0) n_ = g.size();
  if (g.size() != n_) throw std::invalid_argument("group algebra degree mismatch");
  terms_[g] += c;
}

cplx GroupAlgebraElement::coefficient(const Permutation& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out(n_);
  for (const auto& [g, a] : terms_)
    for (const auto& [h, b] : o.terms_) out.add(g * h, a * b);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out = *this;
  for (const auto& [g, b] : o.terms_) out.add(g, b);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const { return *this + o.scaled(-1.0); }

GroupAlgebraElement GroupAlgebraElement::scaled(cplx c) const {
  GroupAlgebraElement out = *this;
  for (auto& [g, a] : out.terms_) a *= c;
  return out;
}

double GroupAlgebraElement::distance(const GroupAlgebraElement& o) const {
  double m = 0.0;
  GroupAlgebraElement diff = *this - o;
  for (const auto& [g, a] : diff.terms_) m = std::max(m, std::abs(a));
  return m;
}

ComplexVector GroupAlgebraElement::to_vector() const {
  ComplexVector v = ComplexVector::Zero(factorial(n_));
  for (const auto& [g, a] : terms_) v(static_cast<Eigen::Index>(lex_rank(g))) += a;
  return v;
}

ComplexMatrix GroupAlgebraElement::left_action() const {
  const auto N = factorial(n_);
  ComplexMatrix m = ComplexMatrix::Zero(N, N);
  const std::vector<Permutation> perms = all_permutations(n_);
  for (const auto& [g, a] : terms_)
    for (std::size_t c = 0; c < perms.size(); ++c) m(static_cast<Eigen::Index>(lex_rank(g * perms[c])), static_cast<Eigen::Index>(c)) += a;
  return m;
}

ComplexMatrix GroupAlgebraElement::right_action() const {
  const auto N = factorial(n_);
  ComplexMatrix m = ComplexMatrix::Zero(N, N);
  const std::vector<Permutation> perms = all_permutations(n_);
  for (const auto& [g, a] : terms_) {
    const Permutation inv = g.inverse();
    for (std::size_t c = 0; c < perms.size(); ++c) m(static_cast<Eigen::Index>(lex_rank(perms[c] * inv)), static_cast<Eigen::Index>(c)) += a;
  }
  return m;
}

ComplexMatrix GroupAlgebraElement::in_irrep(const Partition& shape) const {
  const IrrepData& irrep = irrep_table(shape.size()).irrep(shape);
  RealMatrix re = RealMatrix::Zero(irrep.dim(), irrep.dim());
  RealMatrix im = RealMatrix::Zero(irrep.dim(), irrep.dim());
  for (const auto& [g, a] : terms_) {
    RealMatrix m = RealMatrix::Identity(irrep.dim(), irrep.dim());
    apply_irrep_left(irrep, g, m);
    re += a.real() * m;
    im += a.imag() * m;
  }
  ComplexMatrix out(irrep.dim(), irrep.dim());
  out.real() = re;
  out.imag() = im;
  return out;
}

namespace {

std::vector<Permutation> block_group(const std::vector<int>& blocks, int n) {
  std::vector<Permutation> out;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  auto rec = [&](auto& self, std::size_t b, int start) -> void {
    if (b == blocks.size()) {
      out.emplace_back(img);
      return;
    }
    const int len = blocks[b];
    std::vector<int> seg(len);
    std::iota(seg.begin(), seg.end(), start + 1);
    do {
      std::copy(seg.begin(), seg.end(), img.begin() + start);
      self(self, b + 1, start + len);
    } while (std::next_permutation(seg.begin(), seg.end()));
    std::iota(img.begin() + start, img.begin() + start + len, start + 1);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Permutation> young_subgroup(const Composition& mu) { return block_group(mu.parts(), mu.size()); }

std::vector<Permutation> young_subgroup(const Weight& w) { return young_subgroup(w.split().first); }

ComplexMatrix young_projector(const Partition& shape, const Composition& mu) {
  if (shape.size() != mu.size()) throw std::invalid_argument("young_projector: sizes differ");
  return GroupAlgebraElement::average(young_subgroup(mu)).in_irrep(shape);
}

Permutation sorting_permutation(const Ditstring& x) {
  std::vector<int> pos(x.size());
  std::iota(pos.begin(), pos.end(), 1);
  std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) { return x[a - 1] < x[b - 1]; });
  return Permutation(std::move(pos));
}

GroupAlgebraElement coset_vector(const Ditstring& x) {
  const int n = static_cast<int>(x.size());
  const Permutation t = sorting_permutation(x);
  std::vector<int> counts;
  std::vector<int> sorted(x);
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) counts.push_back(0);
    ++counts.back();
  }
  if (n == 0) return GroupAlgebraElement(0);
  const std::vector<Permutation> y = young_subgroup(Composition(counts));
  const double amp = 1.0 / std::sqrt(static_cast<double>(y.size()));
  GroupAlgebraElement v(n);
  for (const auto& h : y) v.add(t * h, amp);
  return v;
}

std::vector<Permutation> transversal(const Composition& mu) {
  std::vector<Permutation> out;
  const int n = mu.size();
  for (const Permutation& p : all_permutations(n)) {
    bool ok = true;
    for (int k = 1; k <= mu.length() && ok; ++k)
      for (int i = mu.prefix(k - 1) + 1; i < mu.prefix(k); ++i)
        if (p(i) > p(i + 1)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace schur
